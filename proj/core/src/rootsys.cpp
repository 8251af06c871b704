#include "affgr/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace affgr {

// ---------------------------------------------------------------- CartanType

CartanType CartanType::parse(std::string_view label) {
  auto bad = [&] { return ArgumentError("unknown Cartan type '" + std::string(label) + "'"); };
  if (label.size() < 2) throw bad();
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (f < 'A' || f > 'G') throw bad();
  int n = 0;
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw bad();
  CartanType t{static_cast<Family>(f), n};
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  // Rank 12 already gives 78+ roots in type A; beyond ~20 the integer
  // bounds in the scans stop being meaningful.
  if (!ok || n > 20) throw bad();
  return t;
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

bool CartanType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (v.size() != cols_) throw ArgumentError("matrix/vector size mismatch");
  IntVec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      Int a = (*this)(i, j);
      if (a != 0 && v[j] != 0) s = checked_add(s, checked_mul(a, v[j]));
    }
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& m) const {
  if (cols_ != m.rows_) throw ArgumentError("matrix size mismatch");
  IntMatrix r(rows_, m.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < m.cols_; ++j)
        if (m(k, j) != 0) r(i, j) = checked_add(r(i, j), checked_mul(a, m(k, j)));
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

// ---------------------------------------------------------------- Coweight

bool Coweight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
}

bool Coweight::is_dominant() const {
  return std::all_of(c_.begin(), c_.end(), [](Int x) { return x >= 0; });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  if (o.rank() != rank()) throw ArgumentError("coweight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  if (o.rank() != rank()) throw ArgumentError("coweight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

Coweight operator-(const Coweight& a) {
  Coweight r = a;
  for (auto& x : r.c_) x = checked_sub(0, x);
  return r;
}

Coweight operator*(Int k, const Coweight& a) {
  Coweight r = a;
  for (auto& x : r.c_) x = checked_mul(k, x);
  return r;
}

std::size_t CoweightHash::operator()(const Coweight& c) const noexcept {
  return boost::hash_range(c.coords().begin(), c.coords().end());
}

std::string to_string(const Coweight& c) {
  std::string s;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Coweight& c) { return os << '(' << to_string(c) << ')'; }

IntVec parse_int_list(std::string_view text) {
  IntVec out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ArgumentError("malformed integer list '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------- WeylElement

WeylElement::WeylElement(IntMatrix action, IntMatrix inverse_action)
    : m_(std::move(action)), inv_(std::move(inverse_action)) {}

WeylElement WeylElement::identity(std::size_t rank) {
  return WeylElement(IntMatrix::identity(rank), IntMatrix::identity(rank));
}

Coweight WeylElement::apply(const Coweight& c) const { return Coweight(m_ * c.coords()); }

Coweight WeylElement::apply_inverse(const Coweight& c) const { return Coweight(inv_ * c.coords()); }

IntVec WeylElement::apply_to_root(const IntVec& beta) const {
  // <w lambda, w beta> = <lambda, beta> forces w(beta) = (M^{-1})^T beta.
  const std::size_t n = inv_.rows();
  if (beta.size() != n) throw ArgumentError("root rank mismatch");
  IntVec r(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (inv_(i, j) != 0 && beta[i] != 0) s = checked_add(s, checked_mul(inv_(i, j), beta[i]));
    r[j] = s;
  }
  return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return WeylElement(a.m_ * b.m_, b.inv_ * a.inv_);
}

Coweight WeylElement::chamber_key() const { return apply(Coweight(IntVec(rank(), 1))); }

// ---------------------------------------------------------------- RootSystem

namespace {

IntMatrix build_cartan(const CartanType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j, Int cij, Int cji) {
    c(i, j) = cij;
    c(j, i) = cji;
  };
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Family::E:
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::F:
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      break;
    case Family::G:
      link(0, 1, -3, -1);
      break;
  }
  return c;
}

// Gauss-Jordan over Q. Returns (det, inverse).
std::pair<Rational, std::vector<RatVec>> invert(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<RatVec> m(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw ConsistencyError("singular Cartan matrix");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    Rational p = m[col][col];
    det *= p;
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<RatVec> inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return {det, inv};
}

Int height_of(const IntVec& v) {
  Int h = 0;
  for (Int x : v) h = checked_add(h, x);
  return h;
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(type), rank_(static_cast<std::size_t>(type.rank)) {
  cartan_ = build_cartan(type_);
  const std::size_t n = rank_;

  auto [det, inv] = invert(cartan_.transposed());
  det_ = to_int(det);
  adj_t_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj_t_(i, j) = to_int(inv[i][j] * det);

  // Relative squared lengths along the Dynkin graph: L_j / L_i = C[i][j] / C[j][i].
  std::vector<Rational> len(n, 0);
  len[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || cartan_(i, j) == 0 || len[j] != 0) continue;
      len[j] = len[i] * Rational(cartan_(i, j)) / Rational(cartan_(j, i));
      queue.push_back(j);
    }
  }
  Rational lmax = *std::max_element(len.begin(), len.end());
  simple_ratios_.resize(n);
  for (std::size_t i = 0; i < n; ++i) simple_ratios_[i] = static_cast<int>(to_int(lmax / len[i]));

  // Closure of the simple roots under simple reflections, carrying the
  // coroot and the simple root each root is conjugate to.
  struct Entry {
    IntVec coroot;
    int ratio;
  };
  std::map<IntVec, Entry> found;
  std::deque<IntVec> work;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0), ec(n, 0);
    e[i] = 1;
    ec[i] = 1;
    found.emplace(e, Entry{ec, simple_ratios_[i]});
    work.push_back(e);
  }
  while (!work.empty()) {
    IntVec beta = work.front();
    work.pop_front();
    const Entry entry = found.at(beta);
    for (std::size_t i = 0; i < n; ++i) {
      Int p = 0;  // <coroot_i, beta>
      Int q = 0;  // <beta coroot, alpha_i>
      for (std::size_t j = 0; j < n; ++j) {
        p = checked_add(p, checked_mul(cartan_(i, j), beta[j]));
        q = checked_add(q, checked_mul(entry.coroot[j], cartan_(j, i)));
      }
      if (p == 0) continue;
      IntVec img = beta;
      img[i] = checked_sub(img[i], p);
      if (std::any_of(img.begin(), img.end(), [](Int x) { return x < 0; })) continue;
      if (found.count(img)) continue;
      IntVec cor = entry.coroot;
      cor[i] = checked_sub(cor[i], q);
      found.emplace(img, Entry{cor, entry.ratio});
      work.push_back(img);
    }
  }

  std::vector<IntVec> sorted;
  for (auto& [k, v] : found) sorted.push_back(k);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const IntVec& a, const IntVec& b) { return height_of(a) < height_of(b); });
  for (auto& beta : sorted) {
    const Entry& e = found.at(beta);
    roots_.push_back(beta);
    coroot_coeffs_.push_back(e.coroot);
    coroots_.push_back(from_coroot_coordinates(e.coroot));
    ratios_.push_back(e.ratio);
  }
  theta_id_ = roots_.size() - 1;
  if (roots_.size() > 1 && height_of(roots_[theta_id_ - 1]) == height_of(roots_[theta_id_]))
    throw ConsistencyError("highest root is not unique");

  simple_ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    simple_ids_[i] = *find_root(e);
  }

  if (n <= 4) {
    std::unordered_set<Coweight, CoweightHash> seen;
    std::deque<WeylElement> q{WeylElement::identity(n)};
    seen.insert(q.front().chamber_key());
    while (!q.empty()) {
      WeylElement w = q.front();
      q.pop_front();
      table_.push_back(w);
      for (int i = 1; i <= static_cast<int>(n); ++i) {
        WeylElement v = simple_reflection(i) * w;
        if (seen.insert(v.chamber_key()).second) q.push_back(v);
      }
    }
  }
}

void RootSystem::check_rank(const Coweight& c) const {
  if (c.rank() != rank_)
    throw ArgumentError("coweight " + to_string(c) + " has rank " + std::to_string(c.rank()) + ", expected " +
                        std::to_string(rank_));
}

std::optional<std::size_t> RootSystem::find_root(const IntVec& beta) const {
  auto it = std::find(roots_.begin(), roots_.end(), beta);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

std::size_t RootSystem::simple_root_id(int i) const {
  if (i < 1 || i > static_cast<int>(rank_)) throw ArgumentError("simple index out of range: " + std::to_string(i));
  return simple_ids_[static_cast<std::size_t>(i - 1)];
}

Int RootSystem::height(std::size_t id) const { return height_of(root(id)); }

Int RootSystem::regularity_constant() const {
  if (type_.family == Family::G) return 3;
  return type_.simply_laced() ? 1 : 2;
}

std::vector<int> RootSystem::minuscule_indices() const {
  std::vector<int> m{0};
  for (std::size_t i = 0; i < rank_; ++i)
    if (kac_labels()[i] == 1) m.push_back(static_cast<int>(i + 1));
  return m;
}

Coweight RootSystem::fundamental_coweight(int i) const {
  if (i < 0 || i > static_cast<int>(rank_)) throw ArgumentError("fundamental coweight index out of range");
  Coweight c = Coweight::zero(rank_);
  if (i > 0) c[static_cast<std::size_t>(i - 1)] = 1;
  return c;
}

Int RootSystem::pair(const Coweight& lambda, const IntVec& beta) const {
  check_rank(lambda);
  if (beta.size() != rank_) throw ArgumentError("root rank mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    if (beta[i] != 0 && lambda[i] != 0) s = checked_add(s, checked_mul(beta[i], lambda[i]));
  return s;
}

Int RootSystem::pair(const Coweight& lambda, std::size_t id) const { return pair(lambda, root(id)); }

Coweight RootSystem::reflect(const Coweight& lambda, std::size_t id) const {
  Int p = pair(lambda, id);
  if (p == 0) return lambda;
  return lambda - p * coroots_[id];
}

Coweight RootSystem::simple_reflect(const Coweight& lambda, int i) const {
  check_rank(lambda);
  if (i < 1 || i > static_cast<int>(rank_)) throw ArgumentError("simple index out of range: " + std::to_string(i));
  const auto j = static_cast<std::size_t>(i - 1);
  Coweight r = lambda;
  const Int p = lambda[j];
  if (p == 0) return r;
  for (std::size_t k = 0; k < rank_; ++k)
    if (cartan_(j, k) != 0) r[k] = checked_sub(r[k], checked_mul(p, cartan_(j, k)));
  return r;
}

Int RootSystem::rho_pair(const Coweight& lambda) const {
  Int s = 0;
  for (std::size_t id = 0; id < roots_.size(); ++id) s = checked_add(s, pair(lambda, id));
  return s;
}

WeylElement RootSystem::simple_reflection(int i) const {
  if (i < 1 || i > static_cast<int>(rank_)) throw ArgumentError("simple index out of range: " + std::to_string(i));
  const auto j = static_cast<std::size_t>(i - 1);
  IntMatrix m = IntMatrix::identity(rank_);
  for (std::size_t k = 0; k < rank_; ++k) m(k, j) -= cartan_(j, k);
  return WeylElement(m, m);
}

WeylElement RootSystem::reflection(std::size_t id) const {
  // s_beta(c) = c - <c, beta> coroot(beta): matrix I - coroot * beta^T.
  const IntVec& beta = root(id);
  const Coweight& cor = coroots_[id];
  IntMatrix m = IntMatrix::identity(rank_);
  for (std::size_t k = 0; k < rank_; ++k)
    for (std::size_t j = 0; j < rank_; ++j) m(k, j) = checked_sub(m(k, j), checked_mul(cor[k], beta[j]));
  return WeylElement(m, m);
}

WeylElement RootSystem::from_word(std::span<const int> word) const {
  WeylElement w = WeylElement::identity(rank_);
  for (int i : word) w = w * simple_reflection(i);
  return w;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<int> word;
  Coweight key = w.chamber_key();
  while (true) {
    std::size_t i = 0;
    while (i < rank_ && key[i] >= 0) ++i;
    if (i == rank_) break;
    word.push_back(static_cast<int>(i + 1));
    key = simple_reflect(key, static_cast<int>(i + 1));
  }
  return word;
}

std::size_t RootSystem::length(const WeylElement& w) const {
  Coweight key = w.chamber_key();
  std::size_t n = 0;
  for (std::size_t id = 0; id < roots_.size(); ++id)
    if (pair(key, id) < 0) ++n;
  return n;
}

bool RootSystem::inverse_keeps_positive(const WeylElement& w, std::size_t id) const {
  return pair(w.chamber_key(), id) > 0;
}

WeylElement RootSystem::longest_element(std::span<const int> gens) const {
  WeylElement w = WeylElement::identity(rank_);
  std::size_t len = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : gens) {
      WeylElement v = w * simple_reflection(j);
      std::size_t lv = length(v);
      if (lv > len) {
        w = v;
        len = lv;
        grew = true;
      }
    }
  }
  return w;
}

WeylElement RootSystem::longest_element() const {
  std::vector<int> gens;
  for (int i = 1; i <= static_cast<int>(rank_); ++i) gens.push_back(i);
  return longest_element(gens);
}

const std::vector<WeylElement>& RootSystem::elements() const {
  if (table_.empty()) throw UnsupportedRank("Weyl group table is only built for rank <= 4");
  return table_;
}

Coweight RootSystem::dominant_part(const Coweight& lambda, std::vector<int>* word) const {
  check_rank(lambda);
  Coweight c = lambda;
  while (true) {
    std::size_t i = 0;
    while (i < rank_ && c[i] >= 0) ++i;
    if (i == rank_) break;
    if (word) word->push_back(static_cast<int>(i + 1));
    c = simple_reflect(c, static_cast<int>(i + 1));
  }
  return c;
}

RootSystem::DominantTranslate RootSystem::dominant_translate(const Coweight& lambda) const {
  DominantTranslate out;
  out.dominant = dominant_part(lambda, &out.word);
  out.w = from_word(out.word);
  return out;
}

bool RootSystem::in_chamber(const Coweight& lambda, const WeylElement& w) const {
  check_rank(lambda);
  return w.apply_inverse(lambda).is_dominant();
}

std::optional<WeylElement> RootSystem::common_chamber(const Coweight& a, const Coweight& b) const {
  Int m = 0;
  for (std::size_t id = 0; id < roots_.size(); ++id) {
    Int pa = pair(a, id), pb = pair(b, id);
    if ((pa < 0 && pb > 0) || (pa > 0 && pb < 0)) return std::nullopt;
    m = std::max(m, checked_abs(pb));
  }
  // p = K^2 a + K b + rho, with K large enough that the sign of <p, beta>
  // is decided by a first, then b, then rho.
  const Int k = checked_add(checked_add(m, height(theta_id_)), 1);
  Coweight p = checked_mul(k, k) * a + k * b + Coweight(IntVec(rank_, 1));
  return dominant_translate(p).w;
}

bool RootSystem::positive_sum_in_chamber(const Coweight& nu, const WeylElement& w) const {
  check_rank(nu);
  Coweight v = w.apply_inverse(nu);
  IntVec y = adj_t_ * v.coords();
  for (Int x : y)
    if (x % det_ != 0 || x / det_ < 0) return false;
  return true;
}

RatVec RootSystem::coroot_coordinates(const Coweight& lambda) const {
  check_rank(lambda);
  IntVec y = adj_t_ * lambda.coords();
  RatVec out;
  for (Int x : y) out.emplace_back(x, det_);
  return out;
}

bool RootSystem::in_coroot_lattice(const Coweight& lambda) const {
  check_rank(lambda);
  IntVec y = adj_t_ * lambda.coords();
  return std::all_of(y.begin(), y.end(), [&](Int x) { return x % det_ == 0; });
}

Coweight RootSystem::from_coroot_coordinates(std::span<const Int> x) const {
  if (x.size() != rank_) throw ArgumentError("coroot coordinate rank mismatch");
  Coweight c = Coweight::zero(rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t k = 0; k < rank_; ++k) c[k] = checked_add(c[k], checked_mul(x[j], cartan_(j, k)));
  }
  return c;
}

std::vector<Coweight> RootSystem::weyl_orbit(const Coweight& lambda) const {
  std::unordered_set<Coweight, CoweightHash> seen{lambda};
  std::deque<Coweight> q{lambda};
  while (!q.empty()) {
    Coweight c = q.front();
    q.pop_front();
    for (int i = 1; i <= static_cast<int>(rank_); ++i) {
      Coweight d = simple_reflect(c, i);
      if (seen.insert(d).second) q.push_back(d);
    }
  }
  std::vector<Coweight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affgr
