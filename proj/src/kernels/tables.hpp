#pragma once

#include "asgf/kernels.hpp"

namespace asgf::kernels {

extern const KernelTable kScalarTable;

// Return the backend's table, or nullptr when the target architecture was
// not compiled in. CPU feature detection happens in the dispatcher.
const KernelTable* avx2_table();
const KernelTable* neon_table();

}  // namespace asgf::kernels
