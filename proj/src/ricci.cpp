#include "einflag/ricci.hpp"

namespace einflag {

namespace {

void require_positive(const std::vector<Rat>& y) {
  for (const Rat& v : y)
    if (v <= 0) throw ZeroParameter("metric parameters must be positive");
}

template <typename Num>
Num nr(long v) {
  return Num(Rat(v));
}

}  // namespace

RicciComponents ricci_general(const BracketTable& t, const Decomposition& dims,
                              const MetricParams& m) {
  require_positive(m.y);
  if (m.y.size() != dims.blocks().size())
    throw std::invalid_argument("metric parameter count does not match block layout");
  return {ricci_general_t<Rat>(t, dims, m.y)};
}

// Five closed components; y = (u0, u1, u2, x1, x2).
template <typename Num>
std::vector<Num> ricci_IIb_t(const Decomposition& d, const std::vector<Num>& y) {
  const Num &u0 = y[0], &u1 = y[1], &u2 = y[2], &x1 = y[3], &x2 = y[4];
  Num D = nr<Num>(d.d3 + 4 * d.d4);
  Num x1sq = x1 * x1, x2sq = x2 * x2;
  Num S = nr<Num>(d.d3 + 2 * d.d4 - 2 * d.d1 - 2);

  Num r0 = u0 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) + u0 / x2sq * (nr<Num>(d.d4) / D);
  Num r1 = nr<Num>(1) / (nr<Num>(2 * d.d1) * u1) * (nr<Num>(d.d4) * nr<Num>(2 * d.d1 + 2 - d.d4) / D) +
           u1 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) +
           u1 / (nr<Num>(2 * d.d1) * x2sq) * (nr<Num>(d.d4) * nr<Num>(d.d4 - 2) / D);
  Num r2 = nr<Num>(1) / (nr<Num>(4 * d.d2) * u2) *
               (nr<Num>(d.d2) - nr<Num>(d.d3) * S / (nr<Num>(2) * D)) +
           u2 / (nr<Num>(4 * d.d2) * x1sq) * (nr<Num>(d.d3) * S / (nr<Num>(2) * D));
  Num r3 = nr<Num>(1) / (nr<Num>(2) * x1) - x2 / (nr<Num>(2) * x1sq) * (nr<Num>(d.d4) / D) -
           nr<Num>(1) / (nr<Num>(2) * x1sq) *
               (u0 / D + u1 * nr<Num>(d.d1) / D + u2 * S / (nr<Num>(2) * D));
  Num r4 = nr<Num>(1) / x2 * (nr<Num>(2 * d.d4) / D) + x2 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) -
           nr<Num>(1) / x2sq * (u0 * nr<Num>(2) / D + u1 * nr<Num>(d.d4 - 2) / D);
  return {r0, r1, r2, r3, r4};
}

// Four components; y = (u0, u1, x1, x2).
template <typename Num>
std::vector<Num> ricci_Ib_t(const Decomposition& d, const std::vector<Num>& y) {
  const Num &u0 = y[0], &u1 = y[1], &x1 = y[2], &x2 = y[3];
  Num D = nr<Num>(d.d3 + 4 * d.d4);
  Num x1sq = x1 * x1, x2sq = x2 * x2;

  Num r0 = u0 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) + u0 / x2sq * (nr<Num>(d.d4) / D);
  Num r1 = nr<Num>(1) / (nr<Num>(2 * d.d1) * u1) * (nr<Num>(d.d4) * nr<Num>(2 * d.d1 + 2 - d.d4) / D) +
           u1 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) +
           u1 / (nr<Num>(2 * d.d1) * x2sq) * (nr<Num>(d.d4) * nr<Num>(d.d4 - 2) / D);
  Num r3 = nr<Num>(1) / (nr<Num>(2) * x1) - x2 / (nr<Num>(2) * x1sq) * (nr<Num>(d.d4) / D) -
           nr<Num>(1) / (nr<Num>(2) * x1sq) * (u0 / D + u1 * nr<Num>(d.d1) / D);
  Num r4 = nr<Num>(1) / x2 * (nr<Num>(2 * d.d4) / D) + x2 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) -
           nr<Num>(1) / x2sq * (u0 * nr<Num>(2) / D + u1 * nr<Num>(d.d4 - 2) / D);
  return {r0, r1, r3, r4};
}

// Four components, d4 = 2 built in; y = (u0, u2, x1, x2).
template <typename Num>
std::vector<Num> ricci_Ia_t(const Decomposition& d, const std::vector<Num>& y) {
  const Num &u0 = y[0], &u2 = y[1], &x1 = y[2], &x2 = y[3];
  Num D = nr<Num>(d.d3 + 8);
  Num x1sq = x1 * x1, x2sq = x2 * x2;

  Num r0 = u0 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) + u0 / x2sq * (nr<Num>(2) / D);
  Num r2 = nr<Num>(1) / (nr<Num>(4 * d.d2) * u2) *
               (nr<Num>(d.d2) - nr<Num>(d.d3) * nr<Num>(d.d3 + 2) / (nr<Num>(2) * D)) +
           u2 / (nr<Num>(4 * d.d2) * x1sq) * (nr<Num>(d.d3) * nr<Num>(d.d3 + 2) / (nr<Num>(2) * D));
  Num r3 = nr<Num>(1) / (nr<Num>(2) * x1) - x2 / (nr<Num>(2) * x1sq) * (nr<Num>(2) / D) -
           nr<Num>(1) / (nr<Num>(2) * x1sq) * (u0 / D + u2 * nr<Num>(d.d3 + 2) / (nr<Num>(2) * D));
  Num r4 = nr<Num>(1) / x2 * (nr<Num>(4) / D) + x2 / (nr<Num>(4) * x1sq) * (nr<Num>(d.d3) / D) -
           u0 / x2sq * (nr<Num>(2) / D);
  return {r0, r2, r3, r4};
}

template <typename Num>
std::vector<Num> ricci_components_t(const Decomposition& d, const std::vector<Num>& y) {
  switch (d.dtype) {
    case DType::IIa:
    case DType::IIb: return ricci_IIb_t<Num>(d, y);
    case DType::Ib: return ricci_Ib_t<Num>(d, y);
    case DType::Ia: return ricci_Ia_t<Num>(d, y);
  }
  throw std::invalid_argument("bad decomposition type");
}

template std::vector<Rat> ricci_IIb_t<Rat>(const Decomposition&, const std::vector<Rat>&);
template std::vector<Rat> ricci_Ib_t<Rat>(const Decomposition&, const std::vector<Rat>&);
template std::vector<Rat> ricci_Ia_t<Rat>(const Decomposition&, const std::vector<Rat>&);
template std::vector<Rat> ricci_components_t<Rat>(const Decomposition&, const std::vector<Rat>&);
template std::vector<RatInterval> ricci_IIb_t<RatInterval>(const Decomposition&,
                                                           const std::vector<RatInterval>&);
template std::vector<RatInterval> ricci_Ib_t<RatInterval>(const Decomposition&,
                                                          const std::vector<RatInterval>&);
template std::vector<RatInterval> ricci_Ia_t<RatInterval>(const Decomposition&,
                                                          const std::vector<RatInterval>&);
template std::vector<RatInterval> ricci_components_t<RatInterval>(const Decomposition&,
                                                                  const std::vector<RatInterval>&);

RicciComponents ricci_IIb(const Decomposition& dims, const MetricParams& m) {
  if (dims.dtype != DType::IIa && dims.dtype != DType::IIb)
    throw std::invalid_argument("ricci_IIb needs type IIa/IIb");
  require_positive(m.y);
  return {ricci_IIb_t<Rat>(dims, m.y)};
}

RicciComponents ricci_Ib(const Decomposition& dims, const MetricParams& m) {
  if (dims.dtype != DType::Ib) throw std::invalid_argument("ricci_Ib needs type Ib");
  require_positive(m.y);
  return {ricci_Ib_t<Rat>(dims, m.y)};
}

RicciComponents ricci_Ia(const Decomposition& dims, const MetricParams& m) {
  if (dims.dtype != DType::Ia) throw std::invalid_argument("ricci_Ia needs type Ia");
  require_positive(m.y);
  return {ricci_Ia_t<Rat>(dims, m.y)};
}

std::pair<Rat, Rat> ricci_quotient(const BracketTable& t, const Decomposition& dims,
                                   const QuotientMetricParams& w) {
  if (w.w1 <= 0 || w.w2 <= 0) throw ZeroParameter("quotient weights must be positive");
  Rat b433 = t.get(4, 3, 3);
  Rat r1 = Rat(1) / (2 * w.w1) - w.w2 * b433 / (2 * Rat(dims.d3) * w.w1 * w.w1);
  Rat r2 = (Rat(1, 2) - t.get(3, 4, 3) / (2 * Rat(dims.d4))) / w.w2 +
           w.w2 * b433 / (4 * Rat(dims.d4) * w.w1 * w.w1);
  return {r1, r2};
}

}  // namespace einflag
