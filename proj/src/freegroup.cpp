#include "platlab/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace platlab {

namespace {

void check_rank(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) {
    throw RankMismatch("free words of rank " + std::to_string(u.rank()) + " and " +
                       std::to_string(v.rank()));
  }
}

std::size_t ipow(std::size_t base, int exponent) {
  std::size_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FreeWord

FreeWord::FreeWord(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l == 0 || generator_of(l) > rank_) {
      throw std::invalid_argument("letter " + std::to_string(l) + " outside rank " +
                                  std::to_string(rank_));
    }
  }
}

FreeWord FreeWord::generator(int rank, int index, int exponent) {
  return FreeWord(rank, {exponent < 0 ? -index : index});
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == -letters_[i - 1]) return false;
  }
  return true;
}

std::vector<long> FreeWord::exponent_sums() const {
  std::vector<long> sums(rank_, 0);
  for (Letter l : letters_) sums[generator_of(l) - 1] += exponent_of(l);
  return sums;
}

FreeWord FreeWord::with_rank(int rank) const { return FreeWord(rank, letters_); }

FreeWord reduce(const FreeWord& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return FreeWord(w.rank(), std::move(out));
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  check_rank(u, v);
  std::vector<Letter> letters(u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return reduce(FreeWord(u.rank(), std::move(letters)));
}

FreeWord invert(const FreeWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(-*it);
  return reduce(FreeWord(w.rank(), std::move(letters)));
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  check_rank(u, v);
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

FreeWord power(const FreeWord& w, long exponent) {
  FreeWord base = exponent < 0 ? invert(w) : reduce(w);
  FreeWord result(w.rank());
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) result = multiply(result, base);
  return result;
}

// ---------------------------------------------------------------------------
// Word syntax

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Letter> parse() {
    auto letters = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return letters;
  }

  int max_index() const { return max_index_; }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '*' || text_[pos_] == '.')) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  long integer() {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  std::vector<Letter> word() {
    std::vector<Letter> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ',' || text_[pos_] == ']' || text_[pos_] == ')') {
        return out;
      }
      auto f = factor();
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  std::vector<Letter> factor() {
    std::vector<Letter> base = atom();
    if (at('^')) {
      ++pos_;
      skip_space();
      long e = integer();
      std::vector<Letter> inv(base.rbegin(), base.rend());
      for (Letter& l : inv) l = -l;
      const auto& unit = e < 0 ? inv : base;
      std::vector<Letter> out;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), unit.begin(), unit.end());
      return out;
    }
    return base;
  }

  std::vector<Letter> atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == 'x' || c == 'X') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected generator index");
      }
      long idx = integer();
      if (idx < 1) fail("generator index must be positive");
      max_index_ = std::max<int>(max_index_, static_cast<int>(idx));
      return {static_cast<Letter>(idx)};
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (c == '[') {
      ++pos_;
      auto u = word();
      if (!at(',')) fail("expected ','");
      ++pos_;
      auto v = word();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      std::vector<Letter> out = u;
      out.insert(out.end(), v.begin(), v.end());
      for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(-*it);
      for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(-*it);
      return out;
    }
    if (c == '(') {
      ++pos_;
      auto u = word();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return u;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = 0;
};

}  // namespace

FreeWord parse_word(std::string_view text, int rank) {
  WordParser parser(text);
  auto letters = parser.parse();
  if (rank == 0) rank = std::max(parser.max_index(), 1);
  if (parser.max_index() > rank) {
    throw ParseError("generator index " + std::to_string(parser.max_index()) +
                         " exceeds rank " + std::to_string(rank),
                     0);
  }
  return reduce(FreeWord(rank, std::move(letters)));
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(generator_of(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

// ---------------------------------------------------------------------------
// MagnusSeries

MagnusSeries::MagnusSeries(int rank, int cap) : rank_(rank), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("Magnus cap must be non-negative");
  degrees_.resize(cap + 1);
  for (int k = 0; k <= cap; ++k) degrees_[k].assign(ipow(rank, k), Integer(0));
}

MagnusSeries MagnusSeries::one(int rank, int cap) {
  MagnusSeries s(rank, cap);
  s.degrees_[0][0] = 1;
  return s;
}

std::size_t MagnusSeries::index_of(std::span<const int> monomial) const {
  std::size_t idx = 0;
  for (int g : monomial) {
    if (g < 1 || g > rank_) throw std::out_of_range("monomial index outside rank");
    idx = idx * rank_ + (g - 1);
  }
  return idx;
}

std::vector<int> MagnusSeries::monomial_of(int degree, std::size_t index) const {
  std::vector<int> m(degree);
  for (int i = degree - 1; i >= 0; --i) {
    m[i] = static_cast<int>(index % rank_) + 1;
    index /= rank_;
  }
  return m;
}

const Integer& MagnusSeries::coefficient(std::span<const int> monomial) const {
  static const Integer zero = 0;
  if (static_cast<int>(monomial.size()) > cap_) return zero;
  return degrees_[monomial.size()][index_of(monomial)];
}

void MagnusSeries::set_coefficient(std::span<const int> monomial, Integer value) {
  if (static_cast<int>(monomial.size()) > cap_) throw std::out_of_range("monomial above cap");
  degrees_[monomial.size()][index_of(monomial)] = std::move(value);
}

void MagnusSeries::multiply_generator(int generator, int exponent) {
  const std::size_t g = generator - 1;
  const std::size_t n = rank_;
  if (exponent > 0) {
    for (int k = cap_; k >= 1; --k) {
      const auto& prev = degrees_[k - 1];
      auto& cur = degrees_[k];
      for (std::size_t a = 0; a < prev.size(); ++a) {
        if (!prev[a].is_zero()) cur[a * n + g] += prev[a];
      }
    }
  } else {
    for (int k = 1; k <= cap_; ++k) {
      const auto& prev = degrees_[k - 1];
      auto& cur = degrees_[k];
      for (std::size_t a = 0; a < prev.size(); ++a) {
        if (!prev[a].is_zero()) cur[a * n + g] -= prev[a];
      }
    }
  }
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& other) const {
  if (rank_ != other.rank_ || cap_ != other.cap_) throw RankMismatch("Magnus series shapes differ");
  MagnusSeries out(rank_, cap_);
  for (int i = 0; i <= cap_; ++i) {
    const auto& a = degrees_[i];
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (a[x].is_zero()) continue;
      for (int j = 0; i + j <= cap_; ++j) {
        const auto& b = other.degrees_[j];
        auto& dst = out.degrees_[i + j];
        const std::size_t base = x * b.size();
        for (std::size_t y = 0; y < b.size(); ++y) {
          if (!b[y].is_zero()) dst[base + y] += a[x] * b[y];
        }
      }
    }
  }
  return out;
}

MagnusSeries MagnusSeries::operator-(const MagnusSeries& other) const {
  if (rank_ != other.rank_ || cap_ != other.cap_) throw RankMismatch("Magnus series shapes differ");
  MagnusSeries out = *this;
  for (int k = 0; k <= cap_; ++k) {
    for (std::size_t i = 0; i < out.degrees_[k].size(); ++i) out.degrees_[k][i] -= other.degrees_[k][i];
  }
  return out;
}

MagnusSeries MagnusSeries::inverse() const {
  if (degrees_[0][0] != 1) throw std::domain_error("Magnus series is not a unit");
  MagnusSeries t = one(rank_, cap_);
  for (int k = 1; k <= cap_; ++k) {
    auto& dst = t.degrees_[k];
    for (int j = 1; j <= k; ++j) {
      const auto& s = degrees_[j];
      const auto& prev = t.degrees_[k - j];
      for (std::size_t x = 0; x < s.size(); ++x) {
        if (s[x].is_zero()) continue;
        const std::size_t base = x * prev.size();
        for (std::size_t y = 0; y < prev.size(); ++y) {
          if (!prev[y].is_zero()) dst[base + y] -= s[x] * prev[y];
        }
      }
    }
  }
  return t;
}

bool MagnusSeries::is_one() const { return degrees_[0][0] == 1 && min_positive_degree() > cap_; }

int MagnusSeries::min_positive_degree() const {
  for (int k = 1; k <= cap_; ++k) {
    for (const auto& c : degrees_[k]) {
      if (!c.is_zero()) return k;
    }
  }
  return cap_ + 1;
}

std::map<std::vector<int>, Integer> MagnusSeries::terms() const {
  std::map<std::vector<int>, Integer> out;
  for (int k = 0; k <= cap_; ++k) {
    for (std::size_t i = 0; i < degrees_[k].size(); ++i) {
      if (!degrees_[k][i].is_zero()) out.emplace(monomial_of(k, i), degrees_[k][i]);
    }
  }
  return out;
}

MagnusSeries magnus(const FreeWord& w, int cap) {
  if (cap < 1) throw std::invalid_argument("Magnus cap must be >= 1");
  MagnusSeries s = MagnusSeries::one(w.rank(), cap);
  for (Letter l : w.letters()) s.multiply_generator(generator_of(l), exponent_of(l));
  return s;
}

std::string to_string(const MagnusSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= s.cap(); ++k) {
    auto h = s.homogeneous(k);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i].is_zero()) continue;
      Integer c = h[i];
      bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        out << c;
        continue;
      }
      if (c != 1) out << c << "*";
      for (int g : s.monomial_of(k, i)) out << "X" << g;
    }
  }
  if (first) out << "0";
  return out.str();
}

LcsDepth lcs_depth(const FreeWord& w, int cap) {
  MagnusSeries s = magnus(w, cap);
  int d = s.min_positive_degree();
  if (d > cap) return {cap, true};
  return {d, false};
}

// ---------------------------------------------------------------------------
// CommutatorTree

CommutatorTree CommutatorTree::leaf(int generator, int exponent) {
  if (generator < 1 || (exponent != 1 && exponent != -1)) {
    throw std::invalid_argument("leaf needs a positive generator and exponent +-1");
  }
  auto n = std::make_shared<Node>();
  n->generator = generator;
  n->exponent = exponent;
  n->max_generator = generator;
  return CommutatorTree(std::move(n));
}

CommutatorTree CommutatorTree::bracket(CommutatorTree left, CommutatorTree right) {
  auto n = std::make_shared<Node>();
  n->length = left.length() + right.length();
  n->max_generator = std::max(left.max_generator(), right.max_generator());
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return CommutatorTree(std::move(n));
}

bool CommutatorTree::is_simple() const {
  if (is_leaf()) return true;
  auto l = left();
  auto r = right();
  if (l.is_leaf()) return r.is_simple();
  if (r.is_leaf()) return l.is_simple();
  return false;
}

CommutatorTree CommutatorTree::inverse() const {
  if (is_leaf()) return leaf(generator(), -exponent());
  return bracket(right(), left());
}

bool operator==(const CommutatorTree& a, const CommutatorTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf() || a.length() != b.length()) return false;
  if (a.is_leaf()) return a.generator() == b.generator() && a.exponent() == b.exponent();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

void append_flat(const CommutatorTree& t, std::vector<Letter>& out, bool inverted) {
  if (t.is_leaf()) {
    Letter l = t.exponent() < 0 ? -t.generator() : t.generator();
    out.push_back(inverted ? -l : l);
    return;
  }
  // [A,B] = A B A^-1 B^-1 and [A,B]^-1 = B A B^-1 A^-1.
  auto a = t.left();
  auto b = t.right();
  if (inverted) std::swap(a, b);
  append_flat(a, out, false);
  append_flat(b, out, false);
  append_flat(a, out, true);
  append_flat(b, out, true);
}

}  // namespace

FreeWord flatten(const CommutatorTree& t, int rank) {
  if (t.max_generator() > rank) throw RankMismatch("tree uses a generator beyond the rank");
  std::vector<Letter> letters;
  append_flat(t, letters, false);
  return reduce(FreeWord(rank, std::move(letters)));
}

FreeWord flatten(std::span<const CommutatorTree> product, int rank) {
  std::vector<Letter> letters;
  for (const auto& t : product) {
    if (t.max_generator() > rank) throw RankMismatch("tree uses a generator beyond the rank");
    append_flat(t, letters, false);
  }
  return reduce(FreeWord(rank, std::move(letters)));
}

std::string to_string(const CommutatorTree& t) {
  if (t.is_leaf()) {
    return "x" + std::to_string(t.generator()) + (t.exponent() < 0 ? "^-1" : "");
  }
  return "[" + to_string(t.left()) + "," + to_string(t.right()) + "]";
}

// ---------------------------------------------------------------------------
// Lyndon words and collection

bool is_lyndon(std::span<const int> word) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    // word must be strictly smaller than its rotation starting at r
    for (std::size_t i = 0; i < n; ++i) {
      int a = word[i];
      int b = word[(r + i) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // periodic
    }
  }
  return true;
}

CommutatorTree lyndon_bracketing(std::span<const int> word) {
  if (word.size() == 1) return CommutatorTree::leaf(word[0]);
  // Standard factorization: v is the longest proper suffix that is Lyndon.
  for (std::size_t split = 1; split < word.size(); ++split) {
    auto v = word.subspan(split);
    if (is_lyndon(v)) {
      auto u = word.subspan(0, split);
      return CommutatorTree::bracket(lyndon_bracketing(u), lyndon_bracketing(v));
    }
  }
  throw std::logic_error("lyndon_bracketing: word is not Lyndon");
}

namespace {

MagnusSeries series_power(const MagnusSeries& s, long exponent) {
  MagnusSeries base = exponent < 0 ? s.inverse() : s;
  long e = exponent < 0 ? -exponent : exponent;
  MagnusSeries result = MagnusSeries::one(s.rank(), s.cap());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MagnusSeries tree_series(const CommutatorTree& t, int rank, int cap,
                         std::map<std::vector<int>, MagnusSeries>& cache, std::span<const int> key) {
  std::vector<int> k(key.begin(), key.end());
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  MagnusSeries s = MagnusSeries::one(rank, cap);
  if (t.is_leaf()) {
    s.multiply_generator(t.generator(), t.exponent());
  } else {
    // key of the standard factorization children
    std::size_t split = static_cast<std::size_t>(t.left().length());
    MagnusSeries a = tree_series(t.left(), rank, cap, cache, key.subspan(0, split));
    MagnusSeries b = tree_series(t.right(), rank, cap, cache, key.subspan(split));
    s = a * b * a.inverse() * b.inverse();
  }
  cache.emplace(std::move(k), s);
  return s;
}

}  // namespace

std::vector<CollectedFactor> collect(const MagnusSeries& series) {
  const int n = series.rank();
  const int cap = series.cap();
  if (series.homogeneous(0)[0] != 1) throw std::domain_error("collect: series is not group-like");
  std::vector<CollectedFactor> out;
  MagnusSeries rest = series;
  std::map<std::vector<int>, MagnusSeries> cache;
  for (int g = 1; g <= n; ++g) {
    std::vector<int> mono{g};
    Integer c = rest.coefficient(mono);
    if (c.is_zero()) continue;
    long e = static_cast<long>(c);
    out.push_back({CommutatorTree::leaf(g), e});
    MagnusSeries x = MagnusSeries::one(n, cap);
    x.multiply_generator(g, 1);
    rest = series_power(x, -e) * rest;
  }
  for (int k = 2; k <= cap; ++k) {
    while (true) {
      auto h = rest.homogeneous(k);
      std::size_t idx = h.size();
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!h[i].is_zero()) {
          idx = i;
          break;
        }
      }
      if (idx == h.size()) break;
      std::vector<int> word = rest.monomial_of(k, idx);
      if (!is_lyndon(word)) throw std::logic_error("collect: leading word is not Lyndon");
      long e = static_cast<long>(h[idx]);
      CommutatorTree t = lyndon_bracketing(word);
      MagnusSeries ts = tree_series(t, n, cap, cache, word);
      rest = series_power(ts, -e) * rest;
      out.push_back({t, e});
    }
  }
  return out;
}

FreeWord collected_word(std::span<const CollectedFactor> factors, int rank) {
  FreeWord w(rank);
  for (const auto& f : factors) w = multiply(w, power(flatten(f.tree, rank), f.exponent));
  return w;
}

}  // namespace platlab
