#pragma once

// Extended-precision scalar for cancellation-prone series.
namespace dunkl::detail {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

inline wide wide_abs(wide v) { return v < 0 ? -v : v; }

}  // namespace dunkl::detail
