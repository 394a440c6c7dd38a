#pragma once

// Forward-mode dual numbers. Dual<T, N> carries a value and N partial
// derivatives; nesting Dual<Dual<double, N>, N> yields exact second
// derivatives. All elementary functions are found by ADL so generic code can
// write `using std::sqrt; sqrt(x)` and work for double and Dual alike.

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <limits>
#include <type_traits>

namespace ghlab {

template <typename T, int N>
struct Dual {
  static_assert(N > 0);

  T val{};
  std::array<T, N> d{};

  constexpr Dual() = default;
  constexpr Dual(const T& v) : val(v) {}  // NOLINT(google-explicit-constructor)
  template <typename A>
    requires(std::is_arithmetic_v<A> && !std::is_same_v<A, T>)
  constexpr Dual(A v) : val(T(v)) {}  // NOLINT(google-explicit-constructor)

  /// Independent variable number `slot` with unit seed.
  static constexpr Dual variable(const T& v, int slot) {
    Dual x(v);
    x.d[slot] = T(1);
    return x;
  }

  constexpr Dual& operator+=(const Dual& o) {
    val += o.val;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    val -= o.val;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) {
    for (int i = 0; i < N; ++i) d[i] = d[i] * o.val + val * o.d[i];
    val *= o.val;
    return *this;
  }
  constexpr Dual& operator/=(const Dual& o) {
    const T inv = T(1) / o.val;
    const T q = val * inv;
    for (int i = 0; i < N; ++i) d[i] = (d[i] - q * o.d[i]) * inv;
    val = q;
    return *this;
  }
};

template <typename X>
struct is_dual : std::false_type {};
template <typename T, int N>
struct is_dual<Dual<T, N>> : std::true_type {};
template <typename X>
inline constexpr bool is_dual_v = is_dual<X>::value;

inline constexpr double value_of(double x) { return x; }
template <typename T, int N>
constexpr double value_of(const Dual<T, N>& x) {
  return value_of(x.val);
}

// Dual (op) Dual
template <typename T, int N>
constexpr Dual<T, N> operator+(Dual<T, N> a, const Dual<T, N>& b) { return a += b; }
template <typename T, int N>
constexpr Dual<T, N> operator-(Dual<T, N> a, const Dual<T, N>& b) { return a -= b; }
template <typename T, int N>
constexpr Dual<T, N> operator*(Dual<T, N> a, const Dual<T, N>& b) { return a *= b; }
template <typename T, int N>
constexpr Dual<T, N> operator/(Dual<T, N> a, const Dual<T, N>& b) { return a /= b; }
template <typename T, int N>
constexpr Dual<T, N> operator-(Dual<T, N> a) {
  a.val = -a.val;
  for (auto& x : a.d) x = -x;
  return a;
}
template <typename T, int N>
constexpr Dual<T, N> operator+(const Dual<T, N>& a) { return a; }

// Dual (op) plain arithmetic
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator+(Dual<T, N> a, A b) {
  a.val += b;
  return a;
}
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator+(A b, Dual<T, N> a) {
  a.val += b;
  return a;
}
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator-(Dual<T, N> a, A b) {
  a.val -= b;
  return a;
}
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator-(A b, const Dual<T, N>& a) {
  return Dual<T, N>(T(b)) - a;
}
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator*(Dual<T, N> a, A b) {
  a.val *= b;
  for (auto& x : a.d) x *= b;
  return a;
}
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator*(A b, Dual<T, N> a) {
  return a * b;
}
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator/(Dual<T, N> a, A b) {
  a.val /= b;
  for (auto& x : a.d) x /= b;
  return a;
}
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr Dual<T, N> operator/(A b, const Dual<T, N>& a) {
  return Dual<T, N>(T(b)) / a;
}

// Comparisons act on the value only.
template <typename T, int N>
constexpr bool operator<(const Dual<T, N>& a, const Dual<T, N>& b) { return value_of(a) < value_of(b); }
template <typename T, int N>
constexpr bool operator>(const Dual<T, N>& a, const Dual<T, N>& b) { return value_of(a) > value_of(b); }
template <typename T, int N>
constexpr bool operator<=(const Dual<T, N>& a, const Dual<T, N>& b) { return value_of(a) <= value_of(b); }
template <typename T, int N>
constexpr bool operator>=(const Dual<T, N>& a, const Dual<T, N>& b) { return value_of(a) >= value_of(b); }
template <typename T, int N>
constexpr bool operator==(const Dual<T, N>& a, const Dual<T, N>& b) { return value_of(a) == value_of(b); }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator==(const Dual<T, N>& a, A b) { return value_of(a) == b; }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator<(const Dual<T, N>& a, A b) { return value_of(a) < b; }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator>(const Dual<T, N>& a, A b) { return value_of(a) > b; }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator<=(const Dual<T, N>& a, A b) { return value_of(a) <= b; }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator>=(const Dual<T, N>& a, A b) { return value_of(a) >= b; }

template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator<(A a, const Dual<T, N>& b) { return a < value_of(b); }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator>(A a, const Dual<T, N>& b) { return a > value_of(b); }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator<=(A a, const Dual<T, N>& b) { return a <= value_of(b); }
template <typename T, int N, typename A>
  requires std::is_arithmetic_v<A>
constexpr bool operator>=(A a, const Dual<T, N>& b) { return a >= value_of(b); }

namespace detail {
// f(a) with f'(a) = fp, applied through the chain rule.
template <typename T, int N>
constexpr Dual<T, N> chain(const Dual<T, N>& a, const T& f, const T& fp) {
  Dual<T, N> r(f);
  for (int i = 0; i < N; ++i) r.d[i] = fp * a.d[i];
  return r;
}
}  // namespace detail

template <typename T, int N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
  using std::sqrt;
  const T s = sqrt(a.val);
  return detail::chain(a, s, T(0.5) / s);
}
template <typename T, int N>
Dual<T, N> log(const Dual<T, N>& a) {
  using std::log;
  return detail::chain(a, log(a.val), T(1) / a.val);
}
template <typename T, int N>
Dual<T, N> exp(const Dual<T, N>& a) {
  using std::exp;
  const T e = exp(a.val);
  return detail::chain(a, e, e);
}
template <typename T, int N>
Dual<T, N> sin(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, sin(a.val), cos(a.val));
}
template <typename T, int N>
Dual<T, N> cos(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, cos(a.val), -sin(a.val));
}
template <typename T, int N>
Dual<T, N> atan(const Dual<T, N>& a) {
  using std::atan;
  return detail::chain(a, atan(a.val), T(1) / (T(1) + a.val * a.val));
}
template <typename T, int N>
Dual<T, N> atan2(const Dual<T, N>& y, const Dual<T, N>& x) {
  using std::atan2;
  const T r2 = x.val * x.val + y.val * y.val;
  Dual<T, N> r(atan2(y.val, x.val));
  for (int i = 0; i < N; ++i) r.d[i] = (x.val * y.d[i] - y.val * x.d[i]) / r2;
  return r;
}
template <typename T, int N>
Dual<T, N> abs(const Dual<T, N>& a) {
  return value_of(a) < 0.0 ? -a : a;
}

}  // namespace ghlab

namespace Eigen {

template <typename T, int N>
struct NumTraits<ghlab::Dual<T, N>> : GenericNumTraits<ghlab::Dual<T, N>> {
  using Real = ghlab::Dual<T, N>;
  using NonInteger = ghlab::Dual<T, N>;
  using Nested = ghlab::Dual<T, N>;
  using Literal = ghlab::Dual<T, N>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1 + N,
    MulCost = 1 + 2 * N
  };
  static Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
  static Real dummy_precision() { return Real(1e-12); }
  static Real highest() { return Real(std::numeric_limits<double>::max()); }
  static Real lowest() { return Real(std::numeric_limits<double>::lowest()); }
  static int digits10() { return std::numeric_limits<double>::digits10; }
};

}  // namespace Eigen
