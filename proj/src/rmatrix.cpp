#include "qmx/rmatrix.hpp"

#include <map>

namespace qmx {

HeckeR::HeckeR(int N, bool validate) : N_(N) {
  if (N < 1) fail_domain("HeckeR requires N >= 1");
  if (validate) {
    Report rep = check();
    if (!rep.all_pass())
      fail_internal("HeckeR construction failed validation at N=" + std::to_string(N));
  }
}

HeckeR flipped_hecke_r(int N) {
  HeckeR r(N, false);
  r.flipped_ = true;
  return r;
}

QRat HeckeR::entry(int i, int j, int ip, int jp) const {
  if (i < 1 || j < 1 || ip < 1 || jp < 1 || i > N_ || j > N_ || ip > N_ || jp > N_)
    fail_domain("HeckeR index out of range");
  if (i == j && ip == i && jp == i) return QRat::q_power(-1);
  if (ip == j && jp == i && i != j) return QRat(1);
  if (i == ip && j == jp && i < j) {
    QRat v = QRat::q_power(-1) - QRat::q_power(1);
    if (flipped_ && i == 1 && j == 2) v = -v;
    return v;
  }
  return QRat();
}

std::vector<std::tuple<int, int, QRat>> HeckeR::column(int i, int j) const {
  std::vector<std::tuple<int, int, QRat>> out;
  if (i == j) {
    out.emplace_back(i, j, QRat::q_power(-1));
    return out;
  }
  out.emplace_back(j, i, QRat(1));
  if (i < j) out.emplace_back(i, j, entry(i, j, i, j));
  return out;
}

namespace {

using Vec2 = std::map<std::pair<int, int>, QRat>;
using Vec3 = std::map<std::tuple<int, int, int>, QRat>;

void add2(Vec2& v, int i, int j, const QRat& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = v.find(key);
  if (it == v.end())
    v.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

void add3(Vec3& v, std::tuple<int, int, int> key, const QRat& c) {
  if (c.is_zero()) return;
  auto it = v.find(key);
  if (it == v.end())
    v.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

Vec2 apply_r(const HeckeR& r, const Vec2& v) {
  Vec2 out;
  for (const auto& [ij, c] : v)
    for (const auto& [ip, jp, e] : r.column(ij.first, ij.second)) add2(out, ip, jp, c * e);
  return out;
}

// R (x) I and I (x) R acting on basis vectors of V (x) V (x) V.
Vec3 apply_r12(const HeckeR& r, const Vec3& v) {
  Vec3 out;
  for (const auto& [ijk, c] : v) {
    auto [i, j, k] = ijk;
    for (const auto& [ip, jp, e] : r.column(i, j)) add3(out, {ip, jp, k}, c * e);
  }
  return out;
}

Vec3 apply_r23(const HeckeR& r, const Vec3& v) {
  Vec3 out;
  for (const auto& [ijk, c] : v) {
    auto [i, j, k] = ijk;
    for (const auto& [jp, kp, e] : r.column(j, k)) add3(out, {i, jp, kp}, c * e);
  }
  return out;
}

}  // namespace

Report HeckeR::check(bool flip_entry) const {
  const HeckeR* self = this;
  HeckeR flipped(N_, false);
  if (flip_entry) {
    flipped = flipped_hecke_r(N_);
    self = &flipped;
  }
  Report rep;
  rep.suite = "rhat";
  rep.param("N", std::to_string(N_));

  // Hecke: R^2 + (q - q^-1) R - I = 0, checked column by column.
  {
    bool ok = true;
    std::string witness;
    QRat qm = QRat::q_power(1) - QRat::q_power(-1);
    for (int i = 1; i <= N_ && ok; ++i)
      for (int j = 1; j <= N_ && ok; ++j) {
        Vec2 e;
        add2(e, i, j, QRat(1));
        Vec2 r1 = apply_r(*self, e);
        Vec2 acc = apply_r(*self, r1);
        for (const auto& [k, c] : r1) add2(acc, k.first, k.second, c * qm);
        add2(acc, i, j, QRat(-1));
        if (!acc.empty()) {
          ok = false;
          witness = "column (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    rep.add("Hecke identity (R - q^-1 I)(R + q I) = 0", ok, witness);
  }

  // Braid relation on V (x) V (x) V.
  {
    bool ok = true;
    std::string witness;
    for (int i = 1; i <= N_ && ok; ++i)
      for (int j = 1; j <= N_ && ok; ++j)
        for (int k = 1; k <= N_ && ok; ++k) {
          Vec3 e;
          add3(e, {i, j, k}, QRat(1));
          Vec3 lhs = apply_r12(*self, apply_r23(*self, apply_r12(*self, e)));
          Vec3 rhs = apply_r23(*self, apply_r12(*self, apply_r23(*self, e)));
          if (lhs != rhs) {
            ok = false;
            witness = "column (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ")";
          }
        }
    rep.add("braid relation on triple tensors", ok, witness);
  }

  return rep;
}

}  // namespace qmx
