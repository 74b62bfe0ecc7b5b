#pragma once

#include "ordlat/kernels.hpp"

namespace ordlat::kernels::detail {

// Defined in kernels_avx2.cpp when that unit is compiled; returns the table
// without checking CPU support.
const RowOps* avx2_table();

}  // namespace ordlat::kernels::detail
