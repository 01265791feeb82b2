#include "spinweil/serialize.hpp"

#include <fstream>
#include <sstream>

namespace spinweil {

Json to_json(const Rat& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json to_json(const QuadExt& z) { return {{"d", z.d()}, {"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

Rat rat_from_json(const Json& j) {
  try {
    if (j.is_object()) {
      mpz_class num, den;
      if (num.set_str(j.at("num").get<std::string>(), 10) != 0 || den.set_str(j.at("den").get<std::string>(), 10) != 0)
        throw InputError("rational: malformed integer");
      if (den == 0) throw InputError("rational with zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("rational: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("rational: unsupported encoding " + j.dump());
}

QuadExt quad_from_json(const Json& j) {
  if (j.is_object() && j.contains("d")) {
    try {
      long d = j.at("d").get<long>();
      if (d < 0) throw InputError("quadratic scalar: negative d");
      Rat re = rat_from_json(j.at("re")), im = rat_from_json(j.at("im"));
      if (d == 0) {
        if (!is_zero(im)) throw InputError("quadratic scalar: d = 0 with nonzero imaginary part");
        return QuadExt(re);
      }
      return QuadExt(d, re, im);
    } catch (const Json::exception& e) {
      throw InputError(std::string("quadratic scalar: ") + e.what());
    }
  }
  return QuadExt(rat_from_json(j));
}

BasisPtr resolve_basis(const std::string& name) {
  auto parse_n = [&](const std::string& prefix, int& n) {
    if (name.rfind(prefix, 0) != 0 || name.back() != ']') return false;
    std::string mid = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos) return false;
    n = std::stoi(mid);
    return true;
  };
  int n = 0;
  auto need = [&](int rank) {
    if (n < 1 || rank > kMaxRank) throw InputError("basis " + name + ": unsupported n");
  };
  if (parse_n("S_X[n=", n)) return need(2 * n), basis_S(n);
  if (parse_n("S_Xhat[n=", n)) return need(2 * n), basis_Shat(n);
  if (parse_n("ExtV[n=", n)) return need(4 * n), basis_V(n);
  if (parse_n("S_X(x)S_X[n=", n)) return need(4 * n), basis_SS(n);
  if (parse_n("Dolbeault[n=", n)) return need(2 * n), DolbeaultAlgebra(n).basis();
  try {
    return basis_by_name(name);
  } catch (const std::invalid_argument&) {
    throw InputError("unknown basis " + name);
  }
}

std::string generator_label(int n, int bit) {
  return bit < 2 * n ? "e" + std::to_string(bit + 1) : "f" + std::to_string(bit - 2 * n + 1);
}

int generator_bit(int n, const std::string& label) {
  if (label.size() < 2 || (label[0] != 'e' && label[0] != 'f')) throw InputError("bad generator label " + label);
  std::string num = label.substr(1);
  if (num.find_first_not_of("0123456789") != std::string::npos) throw InputError("bad generator label " + label);
  int i = std::stoi(num);
  if (i < 1 || i > 2 * n) throw InputError("generator out of range " + label);
  return label[0] == 'e' ? i - 1 : 2 * n + i - 1;
}

Json to_json(const SecantData& s) {
  return {{"n", s.n},
          {"P", {to_json(s.p1), to_json(s.p2)}},
          {"d", s.d},
          {"split", s.split},
          {"ell", {to_json(s.ell1), to_json(s.ell2)}},
          {"W", {to_json(s.W1), to_json(s.W2)}}};
}

SecantData secant_from_json(const Json& j) {
  try {
    SecantData s;
    s.n = j.at("n").get<int>();
    s.p1 = graded_from_json<Rat>(j.at("P").at(0));
    s.p2 = graded_from_json<Rat>(j.at("P").at(1));
    s.d = j.at("d").get<long>();
    s.split = j.at("split").get<bool>();
    s.ell1 = graded_from_json<QuadExt>(j.at("ell").at(0));
    s.ell2 = graded_from_json<QuadExt>(j.at("ell").at(1));
    s.W1 = subspace_from_json<QuadExt>(j.at("W").at(0));
    s.W2 = subspace_from_json<QuadExt>(j.at("W").at(1));
    if (s.p1.basis()->rank() != 2 * s.n) throw InputError("secant: P lives on the wrong basis");
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("secant data: ") + e.what());
  }
}

Json to_json(const ThetaPoly& p) {
  Json c = Json::array();
  for (const auto& z : p.coeffs()) c.push_back(z.is_rational() ? to_json(z.re()) : to_json(z));
  return {{"n", p.n()}, {"coeffs", c}};
}

ThetaPoly theta_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 0) throw InputError("theta polynomial: negative n");
    std::vector<QuadExt> c;
    for (const auto& x : j.at("coeffs")) c.push_back(quad_from_json(x));
    if (static_cast<int>(c.size()) > n + 1) throw InputError("theta polynomial: too many coefficients");
    return ThetaPoly(n, c);
  } catch (const Json::exception& e) {
    throw InputError(std::string("theta polynomial: ") + e.what());
  }
}

Json to_json(const DolbeaultAlgebra& A, const HTClass& h) {
  Json c = Json::array();
  for (const auto& x : ht_to_coords(A, h)) c.push_back(to_json(x));
  return {{"n", A.n()}, {"coords", c}};
}

HTClass ht_from_json(const DolbeaultAlgebra& A, const Json& j) {
  try {
    if (j.at("n").get<int>() != A.n()) throw InputError("polyvector class: dimension mismatch");
    Vec<Rat> c;
    for (const auto& x : j.at("coords")) c.push_back(rat_from_json(x));
    if (static_cast<int>(c.size()) != ht_dim(A.n())) throw InputError("polyvector class: wrong coordinate count");
    return ht_from_coords(A, c);
  } catch (const Json::exception& e) {
    throw InputError(std::string("polyvector class: ") + e.what());
  }
}

Json load_json_argument(const std::string& text_or_path) {
  std::string text;
  auto first = text_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    text = text_or_path;
  } else {
    std::ifstream in(text_or_path);
    if (!in) throw InputError("cannot read " + text_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace spinweil
