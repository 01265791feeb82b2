#include "spinweil/igusa.hpp"

namespace spinweil {

MultiIndex igusa_dual_index(int i, int j) { return full_mask(6) & ~((1u << (i - 1)) | (1u << (j - 1))); }

int igusa_dual_sign(int i, int j) { return parity_sign(i + j - 1); }

}  // namespace spinweil
