#include "stlie/quad_tables.hpp"

#include <algorithm>

#include "stlie/errors.hpp"

namespace stlie {

std::string Quad::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    s += static_cast<char>('0' + v[i]);
    if (i < 3) s += ',';
  }
  s += ')';
  return s;
}

namespace {

// orbit of q under right multiplication by H = {e, (13), (24), (13)(24)}:
// swapping slots 1/3, slots 2/4, or both
std::vector<Quad> h_orbit(const Quad& q) {
  Quad a = q;
  Quad b{{q[2], q[1], q[0], q[3]}};
  Quad c{{q[0], q[3], q[2], q[1]}};
  Quad d{{q[2], q[3], q[0], q[1]}};
  std::vector<Quad> orb{a, b, c, d};
  std::sort(orb.begin(), orb.end());
  return orb;
}

}  // namespace

QuadIndexTables QuadIndexTables::build() {
  QuadIndexTables t;
  Quad base{{1, 2, 3, 4}};
  std::array<std::uint8_t, 4> perm = base.v;
  do {
    t.all_.push_back(Quad{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(t.all_.begin(), t.all_.end());

  // the two blocks with fixed labels
  std::vector<Quad> p5 = h_orbit(Quad{{1, 3, 2, 4}});
  std::vector<Quad> p6 = h_orbit(Quad{{3, 1, 4, 2}});

  // remaining four blocks, labelled 1..4 by lexicographically smallest member
  std::vector<std::vector<Quad>> rest;
  for (const Quad& q : t.all_) {
    std::vector<Quad> orb = h_orbit(q);
    if (orb == p5 || orb == p6) continue;
    if (std::find(rest.begin(), rest.end(), orb) == rest.end()) rest.push_back(orb);
  }
  std::sort(rest.begin(), rest.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (rest.size() != 4) throw InconsistentAlgebraError("quad partition: expected 6 blocks");

  for (int m = 1; m <= 4; ++m) t.blocks_[static_cast<std::size_t>(m - 1)] = rest[m - 1];
  t.blocks_[4] = p5;
  t.blocks_[5] = p6;
  for (int m = 1; m <= 6; ++m) {
    for (const Quad& q : t.block(m)) t.theta_[q] = m;
  }

  for (const Quad& q : t.all_) t.sign_[q] = 1;
  for (const Quad& q : {Quad{{1, 4, 2, 3}}, Quad{{2, 3, 1, 4}}, Quad{{3, 2, 4, 1}},
                        Quad{{4, 1, 3, 2}}}) {
    t.sign_[q] = -1;
  }
  return t;
}

const QuadIndexTables& QuadIndexTables::instance() {
  static const QuadIndexTables t = build();
  return t;
}

int QuadIndexTables::theta(const Quad& q) const {
  auto it = theta_.find(q);
  if (it == theta_.end()) throw Error("theta: not a distinct quadruple " + q.str());
  return it->second;
}

int QuadIndexTables::sign_of(const Quad& q) const {
  auto it = sign_.find(q);
  if (it == sign_.end()) throw Error("sign: not a distinct quadruple " + q.str());
  return it->second;
}

QuadIndexTables QuadIndexTables::with_sign_flipped(const Quad& q) const {
  QuadIndexTables t = *this;
  t.sign_.at(q) = -t.sign_.at(q);
  return t;
}

CheckReport classify_P5_P6(const QuadIndexTables& t) {
  CheckReport rep;
  auto omega22 = [](std::uint8_t i) { return i <= 2 ? 0 : 1; };
  for (const Quad& q : t.all_quads()) {
    bool same_ik = omega22(q[0]) == omega22(q[2]);
    bool in_p56 = t.theta(q) >= 5;
    if (same_ik == in_p56) rep.pass();
    else rep.fail("P5/P6 classification wrong at " + q.str());
    // every member of P5 and P6 pairs an even slot with an odd one
    if (in_p56) {
      bool odd_ij = (omega22(q[0]) + omega22(q[1])) % 2 == 1;
      bool odd_kl = (omega22(q[2]) + omega22(q[3])) % 2 == 1;
      if (odd_ij && odd_kl) rep.pass();
      else rep.fail("omega(i)+omega(j) parity wrong at " + q.str());
    }
  }
  // blocks 1..4 each contain a quadruple with omega(i)+omega(j) even, which
  // is what singles P5 and P6 out
  for (int m = 1; m <= 4; ++m) {
    bool has_even = false;
    for (const Quad& q : t.block(m)) {
      if ((omega22(q[0]) + omega22(q[1])) % 2 == 0) has_even = true;
    }
    if (has_even) rep.pass();
    else rep.fail("block " + std::to_string(m) + " has no even omega(i)+omega(j) member");
  }
  for (int m = 1; m <= 6; ++m) {
    const std::vector<Quad>& blk = t.block(m);
    bool first = omega22(blk.front()[0]) == omega22(blk.front()[2]);
    bool constant = true;
    for (const Quad& q : blk) {
      if ((omega22(q[0]) == omega22(q[2])) != first) constant = false;
    }
    if (constant) rep.pass();
    else rep.fail("block " + std::to_string(m) + " not constant under the classification");
  }
  return rep;
}

}  // namespace stlie
