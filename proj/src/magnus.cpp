#include "concordia/magnus.hpp"

#include <numeric>

namespace concordia {

namespace {

// element of the free associative Z-algebra on m letters, truncated past degree 3
struct TruncSeries {
  int m = 0;
  Int c0 = 0;
  std::vector<Int> c1, c2, c3;  // dense, row-major

  explicit TruncSeries(int vars) : m(vars) {
    c1.assign(m, Int(0));
    c2.assign(m * m, Int(0));
    c3.assign(m * m * m, Int(0));
  }
  static TruncSeries one(int vars) {
    TruncSeries s(vars);
    s.c0 = 1;
    return s;
  }
  static TruncSeries meridian(int vars, int j) {  // 1 + X_j
    TruncSeries s = one(vars);
    s.c1[j] = 1;
    return s;
  }
  bool operator==(const TruncSeries& o) const {
    return c0 == o.c0 && c1 == o.c1 && c2 == o.c2 && c3 == o.c3;
  }
  TruncSeries operator*(const TruncSeries& o) const {
    TruncSeries r(m);
    r.c0 = c0 * o.c0;
    for (int i = 0; i < m; ++i) r.c1[i] = c0 * o.c1[i] + c1[i] * o.c0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        r.c2[i * m + j] = c0 * o.c2[i * m + j] + c1[i] * o.c1[j] +
                          c2[i * m + j] * o.c0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          r.c3[(i * m + j) * m + k] =
              c0 * o.c3[(i * m + j) * m + k] + c1[i] * o.c2[j * m + k] +
              c2[i * m + j] * o.c1[k] + c3[(i * m + j) * m + k] * o.c0;
    return r;
  }
  // inverse of 1 + u: 1 - u + u^2 - u^3
  TruncSeries inverse() const {
    if (c0 != 1) throw InternalError("series inverse needs unit constant term");
    TruncSeries u = *this;
    u.c0 = 0;
    TruncSeries r = one(m);
    TruncSeries p = u;
    r = sub(r, p);
    p = p * u;
    r = add(r, p);
    p = p * u;
    r = sub(r, p);
    return r;
  }
  static TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r = a;
    r.c0 += b.c0;
    for (size_t i = 0; i < r.c1.size(); ++i) r.c1[i] += b.c1[i];
    for (size_t i = 0; i < r.c2.size(); ++i) r.c2[i] += b.c2[i];
    for (size_t i = 0; i < r.c3.size(); ++i) r.c3[i] += b.c3[i];
    return r;
  }
  static TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r = a;
    r.c0 -= b.c0;
    for (size_t i = 0; i < r.c1.size(); ++i) r.c1[i] -= b.c1[i];
    for (size_t i = 0; i < r.c2.size(); ++i) r.c2[i] -= b.c2[i];
    for (size_t i = 0; i < r.c3.size(); ++i) r.c3[i] -= b.c3[i];
    return r;
  }
};

TruncSeries conj(const TruncSeries& c, const TruncSeries& x, int eps) {
  TruncSeries a = eps > 0 ? c : c.inverse();
  return a * x * a.inverse();
}

// arc images under the nilpotent Magnus embedding: base arc of each component
// maps to 1 + X_c exactly, the rest by conjugation along the strand
std::vector<TruncSeries> arc_images(const LinkDiagram& d, const WirtingerData& w) {
  int m = d.num_components();
  std::vector<TruncSeries> img(w.num_arcs, TruncSeries(m));
  for (int a = 0; a < w.num_arcs; ++a)
    img[a] = TruncSeries::meridian(m, w.arc_component[a]);

  // per-component chain of under-passages in traversal order
  struct Step {
    int target_arc, over_arc, sign;
  };
  std::vector<std::vector<Step>> chains(m);
  for (int c = 0; c < m; ++c) {
    auto& edges = d.components[c];
    int base = w.base_arc[c];
    for (int e : edges)
      for (auto& x : d.crossings)
        if (x.under_in() == e) {
          int tgt = w.arc_of_edge.at(x.under_out());
          if (tgt == base) continue;  // closing passage, not imposed
          chains[c].push_back({tgt, w.arc_of_edge.at(x.over_in()), x.sign});
        }
  }
  // degree k parts settle after k-1 sweeps; third sweep verifies
  for (int round = 0; round < 3; ++round) {
    bool moved = false;
    for (int c = 0; c < m; ++c) {
      TruncSeries cur = img[w.base_arc[c] - 1];
      for (auto& st : chains[c]) {
        TruncSeries nxt = conj(img[st.over_arc - 1], cur, st.sign);
        if (!(nxt == img[st.target_arc - 1])) moved = true;
        img[st.target_arc - 1] = nxt;
        cur = nxt;
      }
    }
    if (round == 2 && moved)
      throw InternalError("arc image iteration failed to settle");
  }
  return img;
}

}  // namespace

MilnorValue milnor_mu(const LinkDiagram& d, const std::vector<int>& index) {
  int m = d.num_components();
  if (index.size() != 2 && index.size() != 3)
    throw PreconditionError("only invariants of length 2 and 3 are supported");
  for (int i : index)
    if (i < 1 || i > m)
      throw PreconditionError("component index out of range");

  WirtingerData w = wirtinger(d);
  std::vector<TruncSeries> img = arc_images(d, w);

  auto longitude_series = [&](int comp) {
    GroupWord l = longitude_word(d, w, comp);
    TruncSeries s = TruncSeries::one(m);
    for (int letter : l.letters) {
      const TruncSeries& a = img[std::abs(letter) - 1];
      s = s * (letter > 0 ? a : a.inverse());
    }
    return s;
  };

  auto coefficient = [&](const std::vector<int>& idx) {
    TruncSeries s = longitude_series(idx.back() - 1);
    if (idx.size() == 2) return s.c1[idx[0] - 1];
    return s.c2[(idx[0] - 1) * m + (idx[1] - 1)];
  };

  MilnorValue v;
  v.index = index;
  v.raw = coefficient(index);
  if (index.size() == 3) {
    Int g = 0;
    for (size_t drop = 0; drop < index.size(); ++drop) {
      std::vector<int> sub;
      for (size_t k = 0; k < index.size(); ++k)
        if (k != drop) sub.push_back(index[k]);
      g = int_gcd(g, coefficient(sub));
    }
    v.indeterminacy = g;
  }
  if (v.indeterminacy > 0) {
    v.value = v.raw % v.indeterminacy;
    if (v.value < 0) v.value += v.indeterminacy;
  } else {
    v.value = v.raw;
  }
  return v;
}

}  // namespace concordia
