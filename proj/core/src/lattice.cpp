#include "plw/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace plw {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAPoset: return "NotAPoset";
    case Errc::MissingBound: return "MissingBound";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::RaggedTable: return "RaggedTable";
    case Errc::DuplicateOpName: return "DuplicateOpName";
    case Errc::UnknownBuiltin: return "UnknownBuiltin";
    case Errc::BadParams: return "BadParams";
    case Errc::UnknownClassTag: return "UnknownClassTag";
    case Errc::UnknownTheoremId: return "UnknownTheoremId";
    case Errc::ArrowNotTotal: return "ArrowNotTotal";
    case Errc::NotTotal: return "NotTotal";
    case Errc::BoundaryUndefined: return "BoundaryUndefined";
    case Errc::NotAPartialTnorm: return "NotAPartialTnorm";
    case Errc::NotAPartialTconorm: return "NotAPartialTconorm";
    case Errc::NotAnLEA: return "NotAnLEA";
    case Errc::NotZlPrl: return "NotZlPrl";
    case Errc::InputNotPFI: return "InputNotPFI";
    case Errc::InputNotNegation: return "InputNotNegation";
    case Errc::NotAFilter: return "NotAFilter";
    case Errc::NotEquivalence: return "NotEquivalence";
    case Errc::NotACongruence: return "NotACongruence";
    case Errc::QuotientOrderNotLattice: return "QuotientOrderNotLattice";
    case Errc::GridNotClosed: return "GridNotClosed";
    case Errc::NoConsistentOrder: return "NoConsistentOrder";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadArity: return "BadArity";
  }
  return "Error";
}

Lattice Lattice::from_pairs(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  Lattice L;
  L.labels_ = std::move(labels);
  L.n_ = static_cast<int>(L.labels_.size());
  for (int i = 0; i < L.n_; ++i)
    for (int j = i + 1; j < L.n_; ++j)
      if (L.labels_[i] == L.labels_[j])
        throw Error(Errc::SyntaxError, "duplicate element label '" + L.labels_[i] + "'");
  L.leq_.assign(static_cast<size_t>(L.n_) * L.n_, 0);
  for (int i = 0; i < L.n_; ++i) L.leq_[i * L.n_ + i] = 1;
  for (const auto& [a, b] : pairs) L.leq_[L.index_of(a) * L.n_ + L.index_of(b)] = 1;
  L.finish();
  return L;
}

Lattice Lattice::from_leq(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
  Lattice L;
  L.labels_ = std::move(labels);
  L.n_ = static_cast<int>(L.labels_.size());
  if (leq.size() != static_cast<size_t>(L.n_) * L.n_)
    throw Error(Errc::BadParams, "leq matrix size mismatch");
  L.leq_ = std::move(leq);
  for (int i = 0; i < L.n_; ++i) L.leq_[i * L.n_ + i] = 1;
  L.finish();
  return L;
}

Elem Lattice::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  throw Error(Errc::UnknownElement, "'" + label + "'");
}

void Lattice::finish() {
  const int n = n_;
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq_[i * n + j] && leq_[j * n + i])
        throw Error(Errc::NotAPoset, "antisymmetry violated between '" + labels_[i] + "' and '" +
                                         labels_[j] + "'");

  meet_.assign(static_cast<size_t>(n) * n, -1);
  join_.assign(static_cast<size_t>(n) * n, -1);
  std::vector<Elem> cand;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      cand.clear();
      for (int z = 0; z < n; ++z)
        if (le(z, x) && le(z, y)) cand.push_back(z);
      Elem g = -1;
      for (Elem z : cand) {
        bool greatest = true;
        for (Elem w : cand)
          if (!le(w, z)) { greatest = false; break; }
        if (greatest) { g = z; break; }
      }
      if (g < 0)
        throw Error(Errc::MissingBound,
                    "no meet of '" + labels_[x] + "' and '" + labels_[y] + "'");
      meet_[x * n + y] = g;

      cand.clear();
      for (int z = 0; z < n; ++z)
        if (le(x, z) && le(y, z)) cand.push_back(z);
      Elem l = -1;
      for (Elem z : cand) {
        bool least = true;
        for (Elem w : cand)
          if (!le(z, w)) { least = false; break; }
        if (least) { l = z; break; }
      }
      if (l < 0)
        throw Error(Errc::MissingBound,
                    "no join of '" + labels_[x] + "' and '" + labels_[y] + "'");
      join_[x * n + y] = l;
    }
  }

  bottom_ = top_ = -1;
  for (int x = 0; x < n; ++x) {
    bool bot = true, top = true;
    for (int y = 0; y < n; ++y) {
      if (!le(x, y)) bot = false;
      if (!le(y, x)) top = false;
    }
    if (bot) bottom_ = x;
    if (top) top_ = x;
  }
  if (bottom_ < 0 || top_ < 0) throw Error(Errc::MissingBound, "no unique bottom/top");
}

std::vector<std::pair<Elem, Elem>> Lattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n_; ++z)
        if (z != x && z != y && lt(x, z) && lt(z, y)) { cover = false; break; }
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Elem> Lattice::atoms_below(Elem x) const {
  std::vector<Elem> out;
  for (int a = 0; a < n_; ++a) {
    if (a == bottom_ || !le(a, x)) continue;
    bool atom = true;
    for (int b = 0; b < n_; ++b)
      if (b != bottom_ && b != a && lt(b, a)) { atom = false; break; }
    if (atom) out.push_back(a);
  }
  return out;
}

bool Lattice::interval_is_chain(Elem x) const {
  for (int a = 0; a < n_; ++a) {
    if (!le(a, x)) continue;
    for (int b = a + 1; b < n_; ++b)
      if (le(b, x) && !comparable(a, b)) return false;
  }
  return true;
}

Lattice Lattice::dual() const {
  std::vector<std::uint8_t> rev(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rev[i * n_ + j] = leq_[j * n_ + i];
  return from_leq(labels_, std::move(rev));
}

std::vector<std::vector<Elem>> Lattice::automorphisms() const {
  std::vector<Elem> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Elem>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n_ && ok; ++i)
      for (int j = 0; j < n_ && ok; ++j)
        if (le(i, j) != le(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace plw
