// JSON encodings of the public value types.
#pragma once

#include "spinweil/hodgemodel.hpp"
#include "spinweil/spinors.hpp"
#include "spinweil/thetaring.hpp"

#include "json.hpp"

#include <algorithm>

namespace spinweil {

using Json = nlohmann::json;

// Raised for malformed JSON input; the CLI maps it to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const Rat& r);
Json to_json(const QuadExt& z);
// Accepts {"num","den"}, a decimal string "p/q", or an integer.
Rat rat_from_json(const Json& j);
// Accepts {"d","re","im"} or any rational encoding.
QuadExt quad_from_json(const Json& j);

template <class K>
K scalar_from_json(const Json& j);
template <>
inline Rat scalar_from_json<Rat>(const Json& j) {
  return rat_from_json(j);
}
template <>
inline QuadExt scalar_from_json<QuadExt>(const Json& j) {
  return quad_from_json(j);
}

// Resolves registered names and the standard families (S_X, S_Xhat, ExtV, S_X(x)S_X, Dolbeault).
BasisPtr resolve_basis(const std::string& name);

template <class K>
Json to_json(const GradedElement<K>& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json idx = Json::array();
    for (int i : indices_from_mask(m)) idx.push_back(i);
    terms.push_back({{"idx", idx}, {"coeff", to_json(c)}});
  }
  return {{"basis", x.basis()->name}, {"terms", terms}};
}

template <class K>
GradedElement<K> graded_from_json(const Json& j) {
  try {
    BasisPtr b = resolve_basis(j.at("basis").get<std::string>());
    GradedElement<K> x(b);
    for (const auto& t : j.at("terms")) {
      std::vector<int> idx = t.at("idx").get<std::vector<int>>();
      for (int i : idx)
        if (i < 1 || i > b->rank()) throw InputError("generator index out of range");
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("repeated generator index");
      MultiIndex m = mask_from_indices(idx);
      // indices may come in any order; sort with the Koszul sign
      int sign = 1;
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t c = a + 1; c < idx.size(); ++c)
          if (idx[a] > idx[c]) sign = -sign;
      K v = scalar_from_json<K>(t.at("coeff"));
      x.add_term(m, sign < 0 ? K(-v) : v);
    }
    return x;
  } catch (const Json::exception& e) {
    throw InputError(std::string("graded element: ") + e.what());
  }
}

// Words as {"word": ["e1","f3"], "coeff": scalar}.
std::string generator_label(int n, int bit);
int generator_bit(int n, const std::string& label);

template <class K>
Json to_json(const CliffordElement<K>& x) {
  Json words = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (int b = 0; b < 4 * x.n(); ++b)
      if (w & (1u << b)) word.push_back(generator_label(x.n(), b));
    words.push_back({{"word", word}, {"coeff", to_json(c)}});
  }
  return {{"n", x.n()}, {"words", words}};
}

template <class K>
CliffordElement<K> clifford_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 1 || 4 * n > kMaxRank) throw InputError("clifford: unsupported n");
    CliffordElement<K> x(n);
    for (const auto& t : j.at("words")) {
      CliffordElement<K> w = CliffordElement<K>::scalar(n, scalar_from_json<K>(t.at("coeff")));
      for (const auto& g : t.at("word")) w = cl_mul(w, CliffordElement<K>::generator(n, generator_bit(n, g.get<std::string>())));
      x += w;
    }
    return x;
  } catch (const Json::exception& e) {
    throw InputError(std::string("clifford element: ") + e.what());
  }
}

template <class K>
Json to_json(const Matrix<K>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    rows.push_back(r);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class K>
Matrix<K> matrix_from_json(const Json& j) {
  try {
    int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    if (r < 0 || c < 0) throw InputError("matrix: negative size");
    Matrix<K> m(r, c);
    const auto& e = j.at("entries");
    if (static_cast<int>(e.size()) != r) throw InputError("matrix: row count mismatch");
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(e[i].size()) != c) throw InputError("matrix: ragged row");
      for (int k = 0; k < c; ++k) m(i, k) = scalar_from_json<K>(e[i][k]);
    }
    return m;
  } catch (const Json::exception& e) {
    throw InputError(std::string("matrix: ") + e.what());
  }
}

// Row-major echelon basis plus the ambient descriptor.
template <class K>
Json to_json(const Subspace<K>& s) {
  return {{"ambient", s.ambient()}, {"basis", to_json(s.echelon())}};
}

template <class K>
Subspace<K> subspace_from_json(const Json& j) {
  try {
    int amb = j.at("ambient").get<int>();
    Matrix<K> m = matrix_from_json<K>(j.at("basis"));
    if (m.rows() > 0 && m.cols() != amb) throw InputError("subspace: ambient mismatch");
    std::vector<Vec<K>> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return Subspace<K>::span(rows, amb);
  } catch (const Json::exception& e) {
    throw InputError(std::string("subspace: ") + e.what());
  }
}

Json to_json(const SecantData& s);
SecantData secant_from_json(const Json& j);

Json to_json(const ThetaPoly& p);
ThetaPoly theta_from_json(const Json& j);

Json to_json(const DolbeaultAlgebra& A, const HTClass& h);
HTClass ht_from_json(const DolbeaultAlgebra& A, const Json& j);

// Parses inline JSON (text starting with '{' or '[') or reads a file.
Json load_json_argument(const std::string& text_or_path);

}  // namespace spinweil
