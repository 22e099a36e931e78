#include "talex/bigfloat.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <sstream>

#include "talex/errors.hpp"

namespace talex {
namespace numeric_context {

namespace {
unsigned g_precision_bits = 0;
bool g_tol_set = false;
BigFloat& tol_storage() {
    static BigFloat tol;
    return tol;
}
unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}
void ensure_init() {
    if (g_precision_bits == 0) set_precision_bits(128);
}
}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 24) throw validation_error("precision must be at least 24 bits");
    g_precision_bits = bits;
    BigFloat::default_precision(digits10_for_bits(bits));
    if (!g_tol_set) tol_storage() = BigFloat("1e-20");
}

unsigned precision_bits() {
    ensure_init();
    return g_precision_bits;
}

void set_tolerance(const BigFloat& tol) {
    ensure_init();
    tol_storage() = tol;
    g_tol_set = true;
}

void set_tolerance(double tol) { set_tolerance(BigFloat(tol)); }

BigFloat tolerance() {
    ensure_init();
    return tol_storage();
}

BigFloat chop_threshold() {
    ensure_init();
    int e = static_cast<int>(g_precision_bits) - 40;
    if (e < 8) e = 8;
    return ldexp(BigFloat(1), -e);
}

BigFloat pi() {
    ensure_init();
    return boost::math::constants::pi<BigFloat>();
}

}  // namespace numeric_context

bool ComplexScalar::is_zero() const {
    BigFloat t = numeric_context::tolerance();
    return boost::multiprecision::abs(re) <= t && boost::multiprecision::abs(im) <= t;
}

BigFloat ComplexScalar::abs() const { return boost::multiprecision::sqrt(norm2()); }

ComplexScalar& ComplexScalar::operator+=(const ComplexScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ComplexScalar& ComplexScalar::operator-=(const ComplexScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

ComplexScalar& ComplexScalar::operator*=(const ComplexScalar& o) {
    BigFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

ComplexScalar& ComplexScalar::operator/=(const ComplexScalar& o) {
    BigFloat n2 = o.norm2();
    if (n2 == 0) throw error("complex division by zero");
    BigFloat r = (re * o.re + im * o.im) / n2;
    im = (im * o.re - re * o.im) / n2;
    re = r;
    return *this;
}

ComplexScalar inverse(const ComplexScalar& z) {
    ComplexScalar one(1);
    return one /= z;
}

ComplexScalar sqrt(const ComplexScalar& z) {
    using boost::multiprecision::sqrt;
    if (z.re == 0 && z.im == 0) return {};
    BigFloat r = z.abs();
    if (z.re >= 0) {
        BigFloat u = sqrt((r + z.re) / 2);
        return {u, z.im / (2 * u)};
    }
    BigFloat v = sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return {z.im / (2 * v), v};
}

ComplexScalar unit_circle_point(long num, long den) {
    BigFloat theta = numeric_context::pi() * num / den;
    return {cos(theta), sin(theta)};
}

std::string ComplexScalar::str(unsigned digits) const {
    if (digits == 0)
        digits = static_cast<unsigned>(std::ceil(numeric_context::precision_bits() * 0.30103));
    std::ostringstream os;
    os << re.str(digits, std::ios_base::scientific);
    const BigFloat& i = im;
    os << (i < 0 ? " - " : " + ") << boost::multiprecision::abs(i).str(digits, std::ios_base::scientific)
       << "i";
    return os.str();
}

}  // namespace talex
