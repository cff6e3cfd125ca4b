#include "reestype/monomial.hpp"

#include <algorithm>
#include <string>

#include "reestype/errors.hpp"

namespace reestype {

namespace {
constexpr std::uint32_t kExpLimit = 1u << 24;  // overflow guard, degrees in scope are tiny

void check_nvars(std::size_t n) {
  if (n > Monomial::kMaxVars) {
    throw PreconditionError("variable count " + std::to_string(n) +
                            " exceeds supported maximum " +
                            std::to_string(Monomial::kMaxVars));
  }
}
}  // namespace

Monomial::Monomial(std::size_t nvars) : n_(0), deg_(0) {
  check_nvars(nvars);
  exp_.fill(0);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (auto e : exps) set(i++, e);
}

Monomial Monomial::from(std::span<const std::uint32_t> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (e >= kExpLimit) throw PreconditionError("exponent overflow");
  deg_ = deg_ - exp_[i] + e;
  exp_[i] = e;
}

std::uint32_t Monomial::degree_at(std::span<const std::size_t> indices) const {
  std::uint32_t d = 0;
  for (auto i : indices) d += exp_[i];
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  if (n_ != o.n_) throw PreconditionError("monomial product: mismatched variable counts");
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(exp_[i]) + o.exp_[i];
    if (e >= kExpLimit) throw PreconditionError("exponent overflow in product");
    r.exp_[i] = static_cast<std::uint32_t>(e);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (n_ != o.n_) throw PreconditionError("divisibility: mismatched variable counts");
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] > o.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  if (!o.divides(*this)) throw PreconditionError("monomial quotient is not exact");
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = exp_[i] - o.exp_[i];
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw PreconditionError("gcd: mismatched variable counts");
  Monomial r(a.n_);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.n_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.deg_ = d;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw PreconditionError("lcm: mismatched variable counts");
  Monomial r(a.n_);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.n_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.deg_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) throw PreconditionError("coprime: mismatched variable counts");
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
  }
  return true;
}

bool Monomial::operator==(const Monomial& o) const {
  if (n_ != o.n_ || deg_ != o.deg_) return false;
  return std::equal(exp_.begin(), exp_.begin() + n_, o.exp_.begin());
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  check_nvars(nvars);
  std::vector<Stage> st;
  st.push_back({Stage::Type::Weight, std::vector<std::uint32_t>(nvars, 1)});
  st.push_back({Stage::Type::Revlex, {}});
  return MonomialOrder(Kind::Grevlex, nvars, std::move(st));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  check_nvars(nvars);
  std::vector<Stage> st;
  st.push_back({Stage::Type::Lex, {}});
  return MonomialOrder(Kind::Lex, nvars, std::move(st));
}

MonomialOrder MonomialOrder::block_elimination(std::size_t nvars, std::size_t front) {
  std::vector<std::size_t> idx(front);
  for (std::size_t i = 0; i < front; ++i) idx[i] = i;
  return block_elimination(nvars, idx);
}

MonomialOrder MonomialOrder::block_elimination(std::size_t nvars,
                                               std::span<const std::size_t> front) {
  check_nvars(nvars);
  std::vector<std::uint32_t> ind(nvars, 0);
  for (auto i : front) {
    if (i >= nvars) throw PreconditionError("elimination index out of range");
    ind[i] = 1;
  }
  std::vector<Stage> st;
  st.push_back({Stage::Type::Weight, std::move(ind)});
  st.push_back({Stage::Type::Weight, std::vector<std::uint32_t>(nvars, 1)});
  st.push_back({Stage::Type::Revlex, {}});
  return MonomialOrder(Kind::BlockElimination, nvars, std::move(st));
}

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<std::uint32_t> weights) {
  std::size_t n = weights.size();
  check_nvars(n);
  std::vector<Stage> st;
  st.push_back({Stage::Type::Weight, std::move(weights)});
  st.push_back({Stage::Type::Weight, std::vector<std::uint32_t>(n, 1)});
  st.push_back({Stage::Type::Revlex, {}});
  return MonomialOrder(Kind::WeightedGrevlex, n, std::move(st));
}

MonomialOrder MonomialOrder::block_weighted(std::size_t nvars,
                                            std::span<const std::size_t> front,
                                            std::vector<std::uint32_t> weights) {
  check_nvars(nvars);
  if (weights.size() != nvars) throw PreconditionError("weight vector size mismatch");
  std::vector<std::uint32_t> ind(nvars, 0);
  for (auto i : front) {
    if (i >= nvars) throw PreconditionError("elimination index out of range");
    ind[i] = 1;
  }
  std::vector<Stage> st;
  st.push_back({Stage::Type::Weight, std::move(ind)});
  st.push_back({Stage::Type::Weight, std::move(weights)});
  st.push_back({Stage::Type::Weight, std::vector<std::uint32_t>(nvars, 1)});
  st.push_back({Stage::Type::Revlex, {}});
  return MonomialOrder(Kind::BlockElimination, nvars, std::move(st));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) {
    throw PreconditionError("monomial compare: mismatched variable counts");
  }
  for (const Stage& s : stages_) {
    switch (s.type) {
      case Stage::Type::Weight: {
        std::uint64_t wa = 0, wb = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
          wa += static_cast<std::uint64_t>(s.weights[i]) * a[i];
          wb += static_cast<std::uint64_t>(s.weights[i]) * b[i];
        }
        if (wa != wb) return wa <=> wb;
        break;
      }
      case Stage::Type::Revlex: {
        for (std::size_t i = nvars_; i-- > 0;) {
          if (a[i] != b[i]) {
            // smaller exponent in the last differing position wins
            return b[i] <=> a[i];
          }
        }
        break;
      }
      case Stage::Type::Lex: {
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (a[i] != b[i]) return a[i] <=> b[i];
        }
        break;
      }
    }
  }
  return std::strong_ordering::equal;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  if (kind_ != o.kind_ || nvars_ != o.nvars_ || stages_.size() != o.stages_.size())
    return false;
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (stages_[i].type != o.stages_[i].type) return false;
    if (stages_[i].weights != o.stages_[i].weights) return false;
  }
  return true;
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace reestype
