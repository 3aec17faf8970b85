#include "schubert/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>

#include "schubert/error.hpp"

namespace schubert {

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(const CoxeterSystem* system, std::vector<RootIndex> perm)
    : system_(system), perm_(std::move(perm)) {
  const auto n = static_cast<RootIndex>(system_->num_positive_roots());
  for (RootIndex r = 0; r < n; ++r) {
    if (perm_[r] >= n) ++length_;
  }
}

std::vector<Root> GroupElement::images() const {
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(system_->rank()));
  for (int i = 0; i < system_->rank(); ++i) out.push_back(system_->root(perm_[i]));
  return out;
}

namespace {

std::vector<RootIndex> inverse_perm(std::span<const RootIndex> perm) {
  std::vector<RootIndex> inv(perm.size());
  for (std::size_t r = 0; r < perm.size(); ++r) inv[perm[r]] = static_cast<RootIndex>(r);
  return inv;
}

void require_same_system(const GroupElement& a, const GroupElement& b) {
  if (&a.system() != &b.system()) throw SystemMismatch();
}

}  // namespace

std::vector<int> GroupElement::word() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length_));
  GroupElement w = *this;
  while (w.length() > 0) {
    const auto inv = inverse_perm(w.perm_);
    int s = 0;
    while (system_->is_positive(inv[s])) ++s;
    out.push_back(s);
    w = left_multiply(s, w);
  }
  return out;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.system_ != b.system_) return false;
  if (a.system_ == nullptr) return true;
  const auto rank = static_cast<std::size_t>(a.system_->rank());
  return std::equal(a.perm_.begin(), a.perm_.begin() + static_cast<std::ptrdiff_t>(rank),
                    b.perm_.begin());
}

std::size_t GroupElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  if (system_ == nullptr) return h;
  for (int i = 0; i < system_->rank(); ++i) {
    h ^= perm_[i];
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

void link(CartanMatrix& a, int i, int j, int aij = -1, int aji = -1) {
  a[i][j] = aij;
  a[j][i] = aji;
}

}  // namespace

CartanMatrix catalog_cartan(std::string_view label) {
  const std::string name(label);
  if (label.size() < 2) throw UnknownType(name);
  const char family = label.front();
  int n = 0;
  const auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) {
    throw UnknownType(name);
  }

  CartanMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;

  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      if (n < 2) throw UnknownType(name);
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw UnknownType(name);
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case 'D':
      if (n < 4) throw UnknownType(name);
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw UnknownType(name);
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      if (n != 4) throw UnknownType(name);
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      break;
    case 'G':
      if (n != 2) throw UnknownType(name);
      link(a, 0, 1, -3, -1);
      break;
    default:
      throw UnknownType(name);
  }
  return a;
}

CartanMatrix read_cartan(std::istream& in) {
  int rank = 0;
  if (!(in >> rank) || rank < 1) throw MalformedCartan("cartan file: expected a positive rank");
  CartanMatrix a(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank)));
  for (auto& row : a) {
    for (auto& x : row) {
      if (!(in >> x)) throw MalformedCartan("cartan file: expected rank*rank integers");
    }
  }
  std::string extra;
  if (in >> extra) throw MalformedCartan("cartan file: trailing data '" + extra + "'");
  return a;
}

std::shared_ptr<const CoxeterSystem> build_system(std::string_view label) {
  return CoxeterSystem::from_cartan(catalog_cartan(label), std::string(label));
}

std::shared_ptr<const CoxeterSystem> build_system(CartanMatrix cartan, std::string label) {
  return CoxeterSystem::from_cartan(std::move(cartan), std::move(label));
}

// ---------------------------------------------------------------------------
// Construction

namespace {

void validate_cartan(const CartanMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw MalformedCartan("cartan matrix has rank 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw MalformedCartan("cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw MalformedCartan("cartan diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw MalformedCartan("off-diagonal cartan entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0)) {
        throw MalformedCartan("cartan zero pattern must be symmetric");
      }
    }
  }
}

int coxeter_entry(int product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default:
      throw NonFiniteType("cartan entry product " + std::to_string(product) +
                          " gives an infinite dihedral subgroup");
  }
}

std::vector<int> reflect(const CartanMatrix& a, int i, const std::vector<int>& b) {
  int c = 0;
  for (std::size_t j = 0; j < b.size(); ++j) c += a[i][j] * b[j];
  auto out = b;
  out[i] -= c;
  return out;
}

}  // namespace

std::shared_ptr<const CoxeterSystem> CoxeterSystem::from_cartan(CartanMatrix cartan,
                                                                std::string label) {
  validate_cartan(cartan);
  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  const int n = static_cast<int>(cartan.size());
  sys->label_ = std::move(label);
  sys->rank_ = n;

  sys->coxeter_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = coxeter_entry(cartan[i][j] * cartan[j][i]);
      sys->coxeter_[i][j] = m;
      if (m > 3) sys->simply_laced_ = false;
    }
  }

  // Positive roots by closure of the simple roots under simple reflections,
  // remembering how each root was reached so its reflection can be conjugated.
  struct Found {
    std::vector<int> coords;
    int parent;  // discovery index, -1 for simple roots
    int via;     // simple reflection applied to the parent
  };
  std::vector<Found> found;
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    seen.emplace(e, i);
    found.push_back({std::move(e), -1, i});
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      auto b = reflect(cartan, i, found[k].coords);
      Root probe{b};
      if (probe.is_negative()) continue;  // only s_i(alpha_i)
      if (!probe.is_positive()) {
        throw NonFiniteType("reflection produced a root of mixed sign");
      }
      if (seen.contains(b)) continue;
      if (found.size() >= kRootCap) {
        throw NonFiniteType("root generation exceeded " + std::to_string(kRootCap) +
                            " positive roots; cartan matrix is not of finite type");
      }
      seen.emplace(b, static_cast<int>(found.size()));
      found.push_back({std::move(b), static_cast<int>(k), i});
    }
  }

  const std::size_t npos = found.size();
  std::vector<std::size_t> order(npos);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Root ra{found[a].coords};
    const Root rb{found[b].coords};
    if (ra.height() != rb.height()) return ra.height() < rb.height();
    return ra.coords > rb.coords;
  });
  std::vector<std::size_t> slot(npos);
  for (std::size_t k = 0; k < npos; ++k) slot[order[k]] = k;

  sys->num_positive_ = npos;
  if (2 * npos > 0xFFFF) throw NonFiniteType("root system too large for 16-bit indices");
  sys->roots_.resize(2 * npos);
  for (std::size_t k = 0; k < npos; ++k) {
    sys->roots_[slot[k]] = Root{found[k].coords};
    Root neg{found[k].coords};
    for (auto& c : neg.coords) c = -c;
    sys->roots_[slot[k] + npos] = std::move(neg);
  }

  sys->simple_action_.resize(static_cast<std::size_t>(n) * 2 * npos);
  for (int i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < 2 * npos; ++r) {
      const int target = sys->find_root(Root{reflect(cartan, i, sys->roots_[r].coords)});
      if (target < 0) throw NonFiniteType("root system is not closed under reflections");
      sys->simple_action_[static_cast<std::size_t>(i) * 2 * npos + r] =
          static_cast<RootIndex>(target);
    }
  }
  sys->cartan_ = std::move(cartan);

  std::vector<RootIndex> id(2 * npos);
  std::iota(id.begin(), id.end(), RootIndex{0});
  sys->identity_ = sys->make(id);
  for (int i = 0; i < n; ++i) {
    std::vector<RootIndex> perm(2 * npos);
    for (std::size_t r = 0; r < 2 * npos; ++r) perm[r] = sys->simple_action(i, static_cast<RootIndex>(r));
    sys->generators_.push_back(sys->make(std::move(perm)));
  }

  // beta = s_via(parent) and parent = u(alpha_s) give beta = (s_via u)(alpha_s).
  std::vector<std::vector<int>> conj(npos);
  std::vector<int> simple(npos);
  for (std::size_t k = 0; k < npos; ++k) {
    if (found[k].parent < 0) {
      simple[k] = found[k].via;
    } else {
      const auto p = static_cast<std::size_t>(found[k].parent);
      conj[k] = {found[k].via};
      conj[k].insert(conj[k].end(), conj[p].begin(), conj[p].end());
      simple[k] = simple[p];
    }
  }
  sys->reflections_.resize(npos);
  for (std::size_t k = 0; k < npos; ++k) {
    const GroupElement u = sys->element_from_word(conj[k]);
    Reflection t;
    t.element = multiply(multiply(u, sys->generators_[simple[k]]), inverse(u));
    t.root = static_cast<RootIndex>(slot[k]);
    t.conjugator = conj[k];
    t.simple = simple[k];
    sys->reflections_[slot[k]] = std::move(t);
  }

  // Kostant: #{exponents >= k} equals the number of positive roots of height k.
  std::vector<std::size_t> per_height;
  for (std::size_t k = 0; k < npos; ++k) {
    const auto h = static_cast<std::size_t>(sys->roots_[k].height());
    if (per_height.size() <= h) per_height.resize(h + 1, 0);
    ++per_height[h];
  }
  per_height.push_back(0);
  std::size_t order_w = 1;
  for (std::size_t h = 1; h + 1 < per_height.size(); ++h) {
    for (std::size_t c = per_height[h + 1]; c < per_height[h]; ++c) {
      if (order_w > std::numeric_limits<std::size_t>::max() / (h + 1)) {
        order_w = std::numeric_limits<std::size_t>::max();
      } else {
        order_w *= h + 1;
      }
    }
  }
  sys->predicted_order_ = order_w;
  return sys;
}

int CoxeterSystem::find_root(const Root& root) const {
  if (root.coords.size() != static_cast<std::size_t>(rank_)) return -1;
  const bool positive = root.is_positive();
  if (!positive && !root.is_negative()) return -1;
  Root key = root;
  if (!positive) {
    for (auto& c : key.coords) c = -c;
  }
  const auto pos = positive_roots();
  // Positive roots are sorted by (height ascending, coords descending).
  auto it = std::lower_bound(pos.begin(), pos.end(), key, [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  if (it == pos.end() || *it != key) return -1;
  const auto k = static_cast<int>(it - pos.begin());
  return positive ? k : k + static_cast<int>(num_positive_);
}

GroupElement CoxeterSystem::element_from_word(std::span<const int> word) const {
  GroupElement w = identity_;
  for (int s : word) {
    if (s < 0 || s >= rank_) {
      throw PreconditionViolated("generator index " + std::to_string(s + 1) +
                                 " out of range for " + label_);
    }
    w = right_multiply(w, s);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Operations

GroupElement multiply(const GroupElement& u, const GroupElement& v) {
  require_same_system(u, v);
  std::vector<RootIndex> perm(u.perm_.size());
  for (std::size_t r = 0; r < perm.size(); ++r) perm[r] = u.perm_[v.perm_[r]];
  return u.system_->make(std::move(perm));
}

GroupElement inverse(const GroupElement& w) {
  return w.system_->make(inverse_perm(w.perm_));
}

GroupElement left_multiply(int i, const GroupElement& w) {
  const auto& sys = *w.system_;
  std::vector<RootIndex> perm(w.perm_.size());
  for (std::size_t r = 0; r < perm.size(); ++r) perm[r] = sys.simple_action(i, w.perm_[r]);
  return sys.make(std::move(perm));
}

GroupElement right_multiply(const GroupElement& w, int i) {
  const auto& sys = *w.system_;
  std::vector<RootIndex> perm(w.perm_.size());
  for (std::size_t r = 0; r < perm.size(); ++r) {
    perm[r] = w.perm_[sys.simple_action(i, static_cast<RootIndex>(r))];
  }
  return sys.make(std::move(perm));
}

std::vector<std::size_t> inversion_set(const GroupElement& w) {
  const auto& sys = w.system();
  const auto inv = inverse_perm(w.root_permutation());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sys.num_positive_roots(); ++k) {
    if (!sys.is_positive(inv[k])) out.push_back(k);
  }
  return out;
}

bool is_left_descent(int i, const GroupElement& w) {
  return left_multiply(i, w).length() < w.length();
}

std::vector<int> left_descents(const GroupElement& w) {
  const auto& sys = w.system();
  const auto inv = inverse_perm(w.root_permutation());
  std::vector<int> out;
  for (int i = 0; i < sys.rank(); ++i) {
    if (!sys.is_positive(inv[i])) out.push_back(i);
  }
  return out;
}

GroupElement longest_element(const CoxeterSystem& system, std::span<const int> subset) {
  for (int s : subset) {
    if (s < 0 || s >= system.rank()) {
      throw PreconditionViolated("generator index out of range in parabolic subset");
    }
  }
  GroupElement w = system.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : subset) {
      auto sw = left_multiply(s, w);
      if (sw.length() > w.length()) {
        w = std::move(sw);
        grew = true;
        break;
      }
    }
  }
  return w;
}

std::vector<int> support(const GroupElement& w) {
  auto word = w.word();
  std::sort(word.begin(), word.end());
  word.erase(std::unique(word.begin(), word.end()), word.end());
  return word;
}

bool is_involution(const GroupElement& w) { return multiply(w, w).is_identity(); }

int reflection_index(const GroupElement& w) {
  const auto& refl = w.system().reflections();
  for (std::size_t k = 0; k < refl.size(); ++k) {
    if (refl[k].element == w) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace schubert
