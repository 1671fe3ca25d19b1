#pragma once

#include "commcent/kernels.hpp"

namespace commcent::kernels::detail {

extern const KernelTable kScalarTable;

#if defined(COMMCENT_BUILD_AVX2)
extern const KernelTable kAvx2Table;
#endif

}  // namespace commcent::kernels::detail
