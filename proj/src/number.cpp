#include "smoothroots/number.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include "smoothroots/error.hpp"

namespace smoothroots {

namespace {

int g_digits = 64;

mpfr_prec_t digits_to_bits(int d) {
  return static_cast<mpfr_prec_t>(std::ceil(d * 3.3219280948873623)) + 8;
}

mpfr_prec_t current_bits() { return digits_to_bits(g_digits); }

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MultiplicityTooLow: return "MultiplicityTooLow";
    case Errc::OddMultiplicity: return "OddMultiplicity";
    case Errc::NegativeLeading: return "NegativeLeading";
    case Errc::Flat: return "Flat";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::ClusterAmbiguous: return "ClusterAmbiguous";
    case Errc::ClustersOverlap: return "ClustersOverlap";
    case Errc::NotARoot: return "NotARoot";
    case Errc::RealityViolated: return "RealityViolated";
    case Errc::TruncationExhausted: return "TruncationExhausted";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotRealRooted: return "NotRealRooted";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::NegativeValue: return "NegativeValue";
    case Errc::HermitianViolation: return "HermitianViolation";
    case Errc::RankDrop: return "RankDrop";
    case Errc::FlatRecursion: return "FlatRecursion";
    case Errc::NonHermitianSample: return "NonHermitianSample";
    case Errc::UnknownCorpusEntry: return "UnknownCorpusEntry";
    case Errc::InputError: return "InputError";
  }
  return "Unknown";
}

// ---- BigFloat -------------------------------------------------------------

BigFloat::BigFloat() {
  mpfr_init2(v_, current_bits());
  mpfr_set_zero(v_, 1);
}
BigFloat::BigFloat(long v) {
  mpfr_init2(v_, current_bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(double v) {
  mpfr_init2(v_, current_bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}
BigFloat::BigFloat(const mpq_class& q) {
  mpfr_init2(v_, current_bits());
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}
BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}
BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

void BigFloat::set_digits(int decimal_digits) {
  if (decimal_digits < 20) decimal_digits = 20;
  g_digits = decimal_digits;
}
int BigFloat::digits() { return g_digits; }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

mpq_class BigFloat::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) digits = g_digits;
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

int BigFloat::sign() const { return mpfr_sgn(v_); }
bool BigFloat::is_nan() const { return mpfr_nan_p(v_) != 0; }

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}
BigFloat sqrt(const BigFloat& a) {
  BigFloat r;
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r;
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}
BigFloat cos(const BigFloat& a) {
  BigFloat r;
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigFloat sin(const BigFloat& a) {
  BigFloat r;
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

const BigFloat& float_zero_tolerance() {
  static thread_local std::map<int, BigFloat> cache;
  auto it = cache.find(g_digits);
  if (it == cache.end()) {
    BigFloat tol;
    mpfr_set_si(tol.get(), 10, MPFR_RNDN);
    mpfr_pow_si(tol.get(), tol.get(), -(g_digits * 5) / 8, MPFR_RNDN);
    it = cache.emplace(g_digits, tol).first;
  }
  return it->second;
}

std::optional<mpq_class> rationalize(const BigFloat& x, const mpz_class& max_den,
                                     const BigFloat& rel_tol) {
  if (x.is_nan()) return std::nullopt;
  BigFloat scale = abs(x);
  if (scale < BigFloat(1L)) scale = BigFloat(1L);
  const BigFloat tol = rel_tol * scale;
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  BigFloat y = x;
  for (int step = 0; step < 200; ++step) {
    BigFloat fl;
    mpfr_floor(fl.get(), y.get());
    mpz_class a;
    mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
    const mpz_class h = a * h1 + h2;
    const mpz_class k = a * k1 + k2;
    if (k > max_den) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    mpq_class cand(h, k);
    cand.canonicalize();
    if (abs(x - BigFloat(cand)) <= tol) return cand;
    BigFloat frac = y - fl;
    if (frac.sign() == 0) break;
    y = BigFloat(1L) / frac;
  }
  return std::nullopt;
}

std::optional<mpq_class> rationalize(const BigFloat& x) {
  BigFloat tol;
  mpfr_set_si(tol.get(), 10, MPFR_RNDN);
  mpfr_pow_si(tol.get(), tol.get(), -(g_digits * 7) / 10, MPFR_RNDN);
  mpz_class max_den;
  mpz_ui_pow_ui(max_den.get_mpz_t(), 10, static_cast<unsigned long>(g_digits / 4));
  return rationalize(x, max_den, tol);
}

// ---- Real -----------------------------------------------------------------

Real Real::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Real(q);
}

Real Real::from_double(double d) {
  if (!std::isfinite(d)) throw Error(Errc::InputError, "non-finite number");
  mpq_class q(d);
  return Real(q);
}

namespace {

mpq_class parse_decimal(std::string_view s) {
  std::string str(s);
  std::size_t epos = str.find_first_of("eE");
  long exponent = 0;
  std::string mant = str;
  if (epos != std::string::npos) {
    mant = str.substr(0, epos);
    const std::string ex = str.substr(epos + 1);
    if (ex.empty()) throw Error(Errc::InputError, "bad number '" + str + "'");
    char* end = nullptr;
    exponent = std::strtol(ex.c_str(), &end, 10);
    if (*end != '\0') throw Error(Errc::InputError, "bad number '" + str + "'");
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw Error(Errc::InputError, "bad number '" + str + "'");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_dot) ++frac_len;
    } else {
      throw Error(Errc::InputError, "bad number '" + str + "'");
    }
  }
  if (digits.empty()) throw Error(Errc::InputError, "bad number '" + str + "'");
  mpz_class num(digits, 10);
  const long e10 = exponent - frac_len;
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
  mpq_class q = e10 >= 0 ? mpq_class(num * pw) : mpq_class(num, pw);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

}  // namespace

Real Real::parse(std::string_view s) {
  std::string str(s);
  while (!str.empty() && std::isspace(static_cast<unsigned char>(str.back()))) str.pop_back();
  std::size_t b = 0;
  while (b < str.size() && std::isspace(static_cast<unsigned char>(str[b]))) ++b;
  str = str.substr(b);
  if (str.empty()) throw Error(Errc::InputError, "empty number");
  if (str.find('/') != std::string::npos) {
    const std::size_t slash = str.find('/');
    const mpq_class n = parse_decimal(str.substr(0, slash));
    const mpq_class d = parse_decimal(str.substr(slash + 1));
    if (sgn(d) == 0) throw Error(Errc::InputError, "zero denominator in '" + str + "'");
    mpq_class q = n / d;
    q.canonicalize();
    return Real(q);
  }
  return Real(parse_decimal(str));
}

BigFloat Real::to_float() const { return exact() ? BigFloat(q()) : f(); }

double Real::to_double() const { return exact() ? q().get_d() : f().to_double(); }

int Real::sign() const {
  if (exact()) return sgn(q());
  if (abs(f()) <= float_zero_tolerance()) return 0;
  return f().sign();
}

Real Real::operator-() const {
  if (exact()) return Real(mpq_class(-q()));
  return Real(-f());
}

Real operator+(const Real& a, const Real& b) {
  if (a.exact() && b.exact()) return Real(mpq_class(a.q() + b.q()));
  return Real(a.to_float() + b.to_float());
}
Real operator-(const Real& a, const Real& b) {
  if (a.exact() && b.exact()) return Real(mpq_class(a.q() - b.q()));
  return Real(a.to_float() - b.to_float());
}
Real operator*(const Real& a, const Real& b) {
  if (a.exact() && b.exact()) return Real(mpq_class(a.q() * b.q()));
  // An exact zero annihilates floats exactly.
  if (a.is_exact_zero() || b.is_exact_zero()) return Real(0);
  return Real(a.to_float() * b.to_float());
}
Real operator/(const Real& a, const Real& b) {
  if (b.is_exact_zero()) throw Error(Errc::PreconditionViolated, "division by exact zero");
  if (a.exact() && b.exact()) return Real(mpq_class(a.q() / b.q()));
  if (a.is_exact_zero()) return Real(0);
  return Real(a.to_float() / b.to_float());
}

bool operator<(const Real& a, const Real& b) {
  if (a.exact() && b.exact()) return a.q() < b.q();
  return a.to_float() < b.to_float();
}

Real abs(const Real& a) { return a < Real(0) ? -a : a; }

Real sqrt(const Real& a) {
  if (a.exact()) {
    const mpq_class& q = a.q();
    if (sgn(q) < 0) throw Error(Errc::PreconditionViolated, "sqrt of negative value");
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      return Real(mpq_class(n, d));
    }
    return Real(sqrt(BigFloat(q)));
  }
  if (a.f().sign() < 0) return Real(0);
  return Real(sqrt(a.f()));
}

Real Real::rationalized() const {
  if (exact()) return *this;
  if (is_zero()) return Real(0);
  if (auto q = rationalize(f())) return Real(*q);
  return *this;
}

std::string Real::str() const {
  if (exact()) return q().get_str();
  return f().to_string();
}

// ---- Scalar ---------------------------------------------------------------

Scalar Scalar::from_complex(std::complex<double> z) {
  return Scalar(Real::from_double(z.real()), Real::from_double(z.imag()));
}

Scalar Scalar::parse(std::string_view s) {
  std::string str;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) str += c;
  if (str.empty()) throw Error(Errc::InputError, "empty number");
  if (str.back() != 'i') return Scalar(Real::parse(str));
  str.pop_back();
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = str.size(); k-- > 1;) {
    if ((str[k] == '+' || str[k] == '-') && str[k - 1] != 'e' && str[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    im_part = str;
  } else {
    re_part = str.substr(0, split);
    im_part = str.substr(split);
  }
  Real im;
  if (im_part.empty() || im_part == "+") {
    im = Real(1);
  } else if (im_part == "-") {
    im = Real(-1);
  } else {
    im = Real::parse(im_part);
  }
  Real re = re_part.empty() ? Real(0) : Real::parse(re_part);
  return Scalar(re, im);
}

Real Scalar::norm2() const { return re_ * re_ + im_ * im_; }

Real Scalar::abs() const {
  if (im_.is_exact_zero()) return smoothroots::abs(re_);
  return sqrt(norm2());
}

double Scalar::abs_double() const { return std::abs(to_complex()); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.im_.is_exact_zero() && b.im_.is_exact_zero()) return Scalar(a.re_ + b.re_);
  return Scalar(a.re_ + b.re_, a.im_ + b.im_);
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.im_.is_exact_zero() && b.im_.is_exact_zero()) return Scalar(a.re_ - b.re_);
  return Scalar(a.re_ - b.re_, a.im_ - b.im_);
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  const bool ar = a.im_.is_exact_zero(), br = b.im_.is_exact_zero();
  if (ar && br) return Scalar(a.re_ * b.re_);
  if (ar) return Scalar(a.re_ * b.re_, a.re_ * b.im_);
  if (br) return Scalar(a.re_ * b.re_, a.im_ * b.re_);
  return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.im_.is_exact_zero()) {
    if (a.im_.is_exact_zero()) return Scalar(a.re_ / b.re_);
    return Scalar(a.re_ / b.re_, a.im_ / b.re_);
  }
  const Real d = b.norm2();
  return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

Scalar sqrt(const Scalar& a) {
  if (a.im_.is_exact_zero()) {
    if (a.re_ >= Real(0)) return Scalar(sqrt(a.re_));
    return Scalar(Real(0), sqrt(-a.re_));
  }
  const BigFloat x = a.re_.to_float(), y = a.im_.to_float();
  const BigFloat r = hypot(x, y);
  BigFloat re = sqrt((r + x) / BigFloat(2L));
  BigFloat im = sqrt((r - x) / BigFloat(2L));
  if (y.sign() < 0) im = -im;
  Scalar out{Real(re), Real(im)};
  if (a.exact()) {
    Scalar q = out.rationalized();
    if (q.exact() && q * q == a && (q * q - a).is_exact_zero()) return q;
  }
  return out;
}

std::string Scalar::str() const {
  if (im_.is_exact_zero()) return re_.str();
  std::string im = im_.str();
  if (re_.is_exact_zero()) return im + "i";
  if (im[0] != '-') im = "+" + im;
  return re_.str() + im + "i";
}

Scalar pow(const Scalar& a, int k) {
  Scalar r(1);
  Scalar b = a;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

}  // namespace smoothroots
