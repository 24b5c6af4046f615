#include "triham/numkit/derivative.hpp"

namespace triham::numkit {

namespace {
cdouble checked(cdouble v) {
    if (!is_finite(v)) fail("NonFinite", "non-finite sample in finite difference");
    return v;
}
}  // namespace

cdouble central_diff(const std::function<cdouble(cdouble)>& f, cdouble z, double h) {
    if (!(h > 0)) fail("BadStep", "h must be positive");
    return (checked(f(z + h)) - checked(f(z - h))) / (2 * h);
}

cdouble central_diff4(const std::function<cdouble(cdouble)>& f, cdouble z, double h) {
    if (!(h > 0)) fail("BadStep", "h must be positive");
    cdouble fp1 = checked(f(z + h)), fm1 = checked(f(z - h));
    cdouble fp2 = checked(f(z + 2 * h)), fm2 = checked(f(z - 2 * h));
    return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12 * h);
}

cdouble central_diff2nd(const std::function<cdouble(cdouble)>& f, cdouble z, double h) {
    if (!(h > 0)) fail("BadStep", "h must be positive");
    return (checked(f(z + h)) - 2.0 * checked(f(z)) + checked(f(z - h))) / (h * h);
}

}  // namespace triham::numkit
