#include "ends/ends_metric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

namespace ends {

namespace {

const FreeGroup& free_of(const GroupPtr& g) { return as<FreeGroup>(*g); }

Word reduced(const FreeGroup& f, const Word& w) {
  const Element e = f.reduce(w);
  const auto s = f.letters(e);
  return Word(s.begin(), s.end());
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = inverse_letter(x);
  return out;
}

template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}

// Smallest d dividing |c| with c = r^(|c|/d).
std::size_t primitive_period(const Word& c) {
  for (std::size_t d = 1; d < c.size(); ++d) {
    if (c.size() % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < c.size() && ok; ++i) ok = c[i] == c[i - d];
    if (ok) return d;
  }
  return c.size();
}

std::vector<Letter> alphabet(int rank) {
  std::vector<Letter> out;
  for (int i = 1; i <= rank; ++i) out.push_back(i);
  for (int i = 1; i <= rank; ++i) out.push_back(-i);
  return out;
}

std::vector<Word> children(int rank, const Word& w) {
  std::vector<Word> out;
  for (Letter x : alphabet(rank)) {
    if (!w.empty() && x == inverse_letter(w.front())) continue;
    Word c{x};
    c.insert(c.end(), w.begin(), w.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool shortlex(const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

}  // namespace

// ---------------------------------------------------------------- ends

FreeGroupEnd::FreeGroupEnd(GroupPtr g, const Word& tail, const Word& period) : group_(std::move(g)) {
  const auto& f = free_of(group_);
  const Word p = reduced(f, period);
  if (p.empty()) throw DomainError("the period of an end must be nontrivial");
  // p = u c u⁻¹ with c cyclically reduced, so pⁿt = u cⁿ (u⁻¹t).
  std::size_t k = 0;
  while (2 * k + 2 <= p.size() && p[k] == inverse_letter(p[p.size() - 1 - k])) ++k;
  const Word u(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  const Word c(p.begin() + static_cast<std::ptrdiff_t>(k), p.end() - static_cast<std::ptrdiff_t>(k));
  const Word w = reduced(f, concat(inverse(u), tail));
  Word s;
  for (std::size_t n = 0; n < w.size() / c.size() + 4; ++n) s.insert(s.end(), c.begin(), c.end());
  s = reduced(f, concat(std::move(s), w));

  // Read from the right: the leftmost letters lie in the periodic part.
  const std::size_t q = primitive_period(c);
  const Word r(s.rbegin(), s.rend());
  std::size_t start = r.size() - q;
  while (start > 0 && r[start - 1] == r[start - 1 + q]) --start;
  tail_.assign(s.end() - static_cast<std::ptrdiff_t>(start), s.end());
  period_.assign(s.end() - static_cast<std::ptrdiff_t>(start + q), s.end() - static_cast<std::ptrdiff_t>(start));
}

Letter FreeGroupEnd::letter(std::size_t i) const {
  if (i < tail_.size()) return tail_[tail_.size() - 1 - i];
  const std::size_t j = (i - tail_.size()) % period_.size();
  return period_[period_.size() - 1 - j];
}

Word FreeGroupEnd::suffix(std::size_t n) const {
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[n - 1 - i] = letter(i);
  return out;
}

Element FreeGroupEnd::approximant(int n) const {
  if (n < 0) throw DomainError("approximant depth must be non-negative");
  return group_->reduce(suffix(static_cast<std::size_t>(n)));
}

std::string FreeGroupEnd::literal() const {
  const auto& f = free_of(group_);
  return f.compact(tail_) + "|" + f.compact(period_);
}

bool FreeGroupEnd::operator==(const FreeGroupEnd& o) const {
  return group_->spec() == o.group_->spec() && tail_ == o.tail_ && period_ == o.period_;
}

FreeGroupEnd parse_end(const GroupPtr& g, std::string_view literal) {
  const auto& f = free_of(g);
  const auto bar = literal.find('|');
  if (bar == std::string_view::npos || literal.find('|', bar + 1) != std::string_view::npos) {
    throw DomainError("end literal must be tail|period: '" + std::string(literal) + "'");
  }
  return FreeGroupEnd(g, f.parse_compact(literal.substr(0, bar)), f.parse_compact(literal.substr(bar + 1)));
}

FreeGroupEnd random_end(const GroupPtr& g, std::mt19937_64& rng, int max_tail, int max_period) {
  const auto letters = alphabet(free_of(g).rank());
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> tail_len(0, max_tail);
  std::uniform_int_distribution<int> period_len(1, max_period);
  auto word = [&](int n) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(letters[pick(rng)]);
    return w;
  };
  const int nt = tail_len(rng);
  const int np = period_len(rng);
  Word t = word(nt);
  Word p = word(np);
  // Redraw degenerate periods rather than fail.
  while (reduced(free_of(g), p).empty()) p = word(np);
  return FreeGroupEnd(g, t, p);
}

std::optional<int> common_suffix_depth(const FreeGroupEnd& a, const FreeGroupEnd& b) {
  if (a.group()->spec() != b.group()->spec()) throw DomainError("ends of different groups");
  if (a == b) return std::nullopt;
  // Past both tails, agreement on |p|+|p'| letters forces equality.
  const std::size_t bound =
      std::max(a.tail().size(), b.tail().size()) + a.period().size() + b.period().size() + 1;
  for (std::size_t i = 0; i < bound; ++i) {
    if (a.letter(i) != b.letter(i)) return static_cast<int>(i);
  }
  throw std::logic_error("distinct canonical ends agree beyond the periodicity bound");
}

double end_distance(const FreeGroupEnd& a, const FreeGroupEnd& b) {
  const auto d = common_suffix_depth(a, b);
  return d ? std::exp(-static_cast<double>(*d)) : 0.0;
}

FreeGroupEnd right_translate_end(const FreeGroupEnd& w, const Element& g) {
  const auto& f = free_of(w.group());
  f.require(g);
  const auto gl = f.letters(g);
  return FreeGroupEnd(w.group(), concat(w.tail(), Word(gl.begin(), gl.end())), w.period());
}

// ---------------------------------------------------------------- cones

ConeSet::ConeSet(GroupPtr g, std::vector<Word> cones) : group_(std::move(g)) {
  const int rank = free_of(group_).rank();
  std::sort(cones.begin(), cones.end(), shortlex);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  for (const auto& w : cones) {
    if (reduced(free_of(group_), w) != w) {
      throw DomainError("cone words must be reduced");
    }
    if (std::none_of(cones_.begin(), cones_.end(), [&](const Word& s) { return is_suffix(s, w); })) {
      cones_.push_back(w);
    }
  }
  // Replace complete sibling families by their parent until none is left.
  for (bool changed = true; changed;) {
    changed = false;
    std::map<Word, std::size_t> siblings;
    for (const auto& w : cones_) {
      if (!w.empty()) ++siblings[Word(w.begin() + 1, w.end())];
    }
    for (const auto& [parent, n] : siblings) {
      if (n != children(rank, parent).size()) continue;
      std::erase_if(cones_, [&](const Word& w) { return !w.empty() && is_suffix(parent, w) && w.size() == parent.size() + 1; });
      cones_.push_back(parent);
      changed = true;
      break;
    }
  }
  std::sort(cones_.begin(), cones_.end(), shortlex);
}

ConeSet ConeSet::none(GroupPtr g) { return ConeSet(std::move(g), {}); }
ConeSet ConeSet::all(GroupPtr g) { return ConeSet(std::move(g), {Word{}}); }
ConeSet ConeSet::cone(GroupPtr g, Word w) { return ConeSet(std::move(g), {std::move(w)}); }
ConeSet ConeSet::of(GroupPtr g, std::vector<Word> cones) { return ConeSet(std::move(g), std::move(cones)); }

bool ConeSet::contains(const FreeGroupEnd& w) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Word& c) { return w.in_cone(c); });
}

bool ConeSet::covers(const Word& v) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Word& c) { return is_suffix(c, v); });
}

ConeSet ConeSet::operator|(const ConeSet& o) const { return ConeSet(group_, concat(cones_, o.cones_)); }

ConeSet ConeSet::operator&(const ConeSet& o) const {
  std::vector<Word> out;
  for (const auto& u : cones_) {
    for (const auto& v : o.cones_) {
      if (is_suffix(u, v)) out.push_back(v);
      else if (is_suffix(v, u)) out.push_back(u);
    }
  }
  return ConeSet(group_, std::move(out));
}

ConeSet ConeSet::operator^(const ConeSet& o) const { return (*this & o.complement()) | (complement() & o); }

void ConeSet::complement_below(const Word& w, std::vector<Word>& out) const {
  if (covers(w)) return;
  if (std::none_of(cones_.begin(), cones_.end(), [&](const Word& c) { return is_suffix(w, c); })) {
    out.push_back(w);
    return;
  }
  for (const auto& c : children(free_of(group_).rank(), w)) complement_below(c, out);
}

ConeSet ConeSet::complement() const {
  std::vector<Word> out;
  complement_below({}, out);
  return ConeSet(group_, std::move(out));
}

ConeSet ConeSet::right_translate(const Element& g) const {
  const auto& f = free_of(group_);
  f.require(g);
  const auto gl = f.letters(g);
  ConeSet out = none(group_);
  for (const auto& w : cones_) {
    std::size_t j = 0;
    while (j < w.size() && j < gl.size() && w[w.size() - 1 - j] == inverse_letter(gl[j])) ++j;
    const Word rest(gl.begin() + static_cast<std::ptrdiff_t>(j), gl.end());
    if (j < w.size()) {
      out = out | cone(group_, concat(Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(j)), rest));
    } else if (w.empty()) {
      return all(group_);
    } else {
      // All of w cancels: the image is everything outside cone(w₀⁻¹·rest).
      out = out | cone(group_, concat(Word{inverse_letter(w.front())}, rest)).complement();
    }
  }
  return out;
}

SubsetPtr ConeSet::to_subset() const {
  if (cones_.empty()) return empty_set(group_);
  std::vector<SubsetPtr> parts;
  for (const auto& w : cones_) parts.push_back(suffix_cone(group_, group_->reduce(w)));
  return parts.size() == 1 ? parts[0] : set_union(std::move(parts));
}

std::string ConeSet::describe() const {
  if (cones_.empty()) return "none";
  if (cones_.front().empty()) return "all";
  std::string out = "cones(";
  for (std::size_t i = 0; i < cones_.size(); ++i) out += (i ? ", " : "") + free_of(group_).compact(cones_[i]);
  return out + ")";
}

std::pair<Word, Word> split_cone(const GroupPtr& g, const Word& w) {
  const auto& f = free_of(g);
  if (f.rank() < 2) throw DomainError("a rank-1 free group has two isolated ends; cones do not split");
  if (reduced(f, w) != w) throw DomainError("cone words must be reduced");
  std::vector<Word> picks;
  for (Letter x : alphabet(f.rank())) {
    if (!w.empty() && (x == w.front() || x == inverse_letter(w.front()))) continue;
    picks.push_back(concat(Word{x}, w));
    if (picks.size() == 2) break;
  }
  return {picks[0], picks[1]};
}

// ---------------------------------------------------------------- bases

namespace {

// Words in the new basis for each standard generator, by breadth-first
// search over reduced words in the basis.
std::vector<Word> inverse_basis(const FreeGroup& f, const std::vector<Word>& basis) {
  if (static_cast<int>(basis.size()) != f.rank()) throw PreconditionError("a basis needs one word per generator");
  std::vector<Element> images;
  for (const auto& b : basis) images.push_back(f.reduce(b));
  std::map<Element, std::size_t> wanted;
  for (int i = 1; i <= f.rank(); ++i) wanted.emplace(f.reduce(Word{i}), static_cast<std::size_t>(i - 1));
  std::vector<std::optional<Word>> found(basis.size());
  std::size_t missing = basis.size();

  struct Node {
    Element value;
    Word word;
  };
  std::deque<Node> queue{{f.identity(), {}}};
  constexpr std::size_t cap = 2'000'000;
  for (std::size_t visited = 0; !queue.empty() && missing > 0; ++visited) {
    if (visited > cap) break;
    Node n = std::move(queue.front());
    queue.pop_front();
    for (Letter x : alphabet(f.rank())) {
      if (!n.word.empty() && x == inverse_letter(n.word.back())) continue;
      const std::size_t i = static_cast<std::size_t>(letter_generator(x));
      Node m{f.multiply(n.value, x > 0 ? images[i] : f.invert(images[i])), n.word};
      m.word.push_back(x);
      if (const auto it = wanted.find(m.value); it != wanted.end() && !found[it->second]) {
        found[it->second] = m.word;
        --missing;
      }
      queue.push_back(std::move(m));
    }
  }
  if (missing > 0) throw PreconditionError("the given words are not a basis within the search bound");
  std::vector<Word> out;
  for (auto& w : found) out.push_back(std::move(*w));
  return out;
}

Word rewrite(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (Letter x : w) {
    const Word& img = images[static_cast<std::size_t>(letter_generator(x))];
    const Word piece = x > 0 ? img : inverse(img);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

FreeGroupEnd rewrite_end(const FreeGroupEnd& w, const std::vector<Word>& images) {
  return FreeGroupEnd(w.group(), rewrite(w.tail(), images), rewrite(w.period(), images));
}

}  // namespace

FreeGroupEnd change_basis(const FreeGroupEnd& w, const std::vector<Word>& basis) {
  return rewrite_end(w, inverse_basis(free_of(w.group()), basis));
}

HolderEstimate holder_compare(const GroupPtr& g, const std::vector<Word>& basis1, const std::vector<Word>& basis2,
                              const std::vector<std::pair<FreeGroupEnd, FreeGroupEnd>>& sample) {
  const auto& f = free_of(g);
  const auto inv1 = inverse_basis(f, basis1);
  const auto inv2 = inverse_basis(f, basis2);
  HolderEstimate out;
  out.ratio_min = std::numeric_limits<double>::infinity();
  out.ratio_max = 0;
  for (const auto& [a, b] : sample) {
    if (a == b) continue;
    ++out.pairs;
    const int d1 = *common_suffix_depth(rewrite_end(a, inv1), rewrite_end(b, inv1));
    const int d2 = *common_suffix_depth(rewrite_end(a, inv2), rewrite_end(b, inv2));
    if (d1 == 0 || d2 == 0) continue;
    ++out.used;
    const double r = static_cast<double>(d2) / d1;
    out.ratio_min = std::min(out.ratio_min, r);
    out.ratio_max = std::max(out.ratio_max, r);
  }
  if (out.pairs < 10) throw PreconditionError("holder comparison needs at least 10 pairs of distinct ends");
  if (out.used == 0) throw PreconditionError("no sampled pair has positive depth in both markings");
  out.alpha = out.ratio_min;
  out.beta = 1.0 / out.ratio_max;
  return out;
}

}  // namespace ends
