#include "ends/group.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <sstream>

#include "perm_table.hpp"

namespace ends {

namespace {

std::atomic<std::uint32_t> next_group_id{1};

std::vector<std::string> letter_labels(int count) {
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) {
    if (count <= 26) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    } else {
      labels.push_back("x" + std::to_string(i + 1));
    }
  }
  return labels;
}

Element checked_generator(const Group& g, Letter letter) {
  const auto& gens = g.generators();
  const int i = letter_generator(letter);
  if (letter == 0 || i >= static_cast<int>(gens.size())) {
    throw DomainError("invalid generator index " + std::to_string(letter) + " for " + g.spec());
  }
  return letter > 0 ? gens[static_cast<std::size_t>(i)] : g.invert(gens[static_cast<std::size_t>(i)]);
}

}  // namespace

// ---------------------------------------------------------------- Group

Group::Group(GroupKind kind, std::string spec)
    : kind_(kind), id_(next_group_id.fetch_add(1)), spec_(std::move(spec)) {}

void Group::set_generators(std::vector<std::string> labels, std::vector<Element> named,
                           std::vector<Element> ball) {
  labels_ = std::move(labels);
  generators_ = std::move(named);
  ball_generators_ = std::move(ball);
}

void Group::require(const Element& g) const {
  if (g.group != id_) throw DomainError("element does not belong to group " + spec_);
}

Element Group::reduce(std::span<const Letter> word) const {
  Element r = identity();
  for (Letter x : word) r = multiply(r, checked_generator(*this, x));
  return r;
}

Element Group::generator_power(Letter letter, long exponent) const {
  return power(checked_generator(*this, letter), exponent);
}

Element Group::power(const Element& g, long n) const {
  require(g);
  Element base = n < 0 ? invert(g) : g;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Element r = identity();
  while (k > 0) {
    if (k & 1UL) r = multiply(r, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return r;
}

std::string Group::format(const Element& g) const {
  require(g);
  const Word w = to_word(g);
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    if (w[i] < 0) run = -run;
    if (!first) out << '*';
    first = false;
    out << labels_[static_cast<std::size_t>(letter_generator(w[i]))];
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

Element Group::parse(std::string_view text) const {
  // Longest label first, so "e12" wins over "e1".
  std::vector<std::size_t> order(labels_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return labels_[a].size() > labels_[b].size(); });

  Element result = identity();
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("cannot parse element '" + std::string(text) + "' in " + spec_ + ": " + why);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '*' || c == '\t') {
      ++pos;
      continue;
    }
    if (c == '(') {
      std::vector<std::vector<int>> cycles;
      while (pos < text.size() && text[pos] == '(') {
        const auto close = text.find(')', pos);
        if (close == std::string_view::npos) fail("unbalanced parenthesis");
        std::vector<int> cycle;
        std::string body(text.substr(pos + 1, close - pos - 1));
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        int point = 0;
        while (in >> point) {
          if (point < 1) fail("points are 1-based");
          cycle.push_back(point - 1);
        }
        cycles.push_back(cycle);
        pos = close + 1;
      }
      int degree = 0;
      for (const auto& cyc : cycles) {
        for (int p : cyc) degree = std::max(degree, p + 1);
      }
      Permutation perm = detail::identity_permutation(degree);
      // Cycles compose right to left like the group product.
      for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        Permutation cyc = detail::identity_permutation(degree);
        for (std::size_t k = 0; k < it->size(); ++k) {
          cyc[static_cast<std::size_t>((*it)[k])] = static_cast<std::uint16_t>((*it)[(k + 1) % it->size()]);
        }
        perm = detail::compose(cyc, perm);
      }
      auto e = from_permutation(perm);
      if (!e) fail("permutation is not an element of the group");
      result = multiply(result, *e);
      continue;
    }
    if (c == '1' && (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      continue;
    }
    Letter letter = 0;
    for (std::size_t i : order) {
      if (text.substr(pos, labels_[i].size()) == labels_[i]) {
        letter = static_cast<Letter>(i + 1);
        pos += labels_[i].size();
        break;
      }
    }
    if (letter == 0 && std::isupper(static_cast<unsigned char>(c))) {
      const std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      auto it = std::find(labels_.begin(), labels_.end(), lower);
      if (it != labels_.end()) {
        letter = -static_cast<Letter>(it - labels_.begin() + 1);
        ++pos;
      }
    }
    if (letter == 0) fail("unknown generator at position " + std::to_string(pos));
    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const char* begin = text.data() + pos;
      const char* end = text.data() + text.size();
      if (begin != end && *begin == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, end, exponent);
      if (ec != std::errc()) fail("bad exponent");
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    result = multiply(result, generator_power(letter, exponent));
  }
  return result;
}

// ---------------------------------------------------------------- FreeGroup

FreeGroup::FreeGroup(int rank)
    : Group(GroupKind::Free, "free(" + std::to_string(rank) + ")"), rank_(rank) {
  if (rank < 1) throw DomainError("free group rank must be positive");
  std::vector<std::string> labels = rank == 1 ? std::vector<std::string>{"t"} : letter_labels(rank);
  std::vector<Element> named;
  std::vector<Element> ball;
  for (int i = 0; i < rank; ++i) {
    named.push_back(make({i + 1}));
    ball.push_back(make({i + 1}));
    ball.push_back(make({-(i + 1)}));
  }
  set_generators(std::move(labels), std::move(named), std::move(ball));
}

Element FreeGroup::reduce(std::span<const Letter> word) const {
  std::vector<std::int32_t> out;
  out.reserve(word.size());
  for (Letter x : word) {
    if (x == 0 || letter_generator(x) >= rank_) {
      throw DomainError("invalid generator index " + std::to_string(x) + " for " + spec());
    }
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return make(std::move(out));
}

Element FreeGroup::multiply(const Element& a, const Element& b) const {
  require(a);
  require(b);
  std::size_t cancel = 0;
  const std::size_t na = a.code.size();
  while (cancel < na && cancel < b.code.size() && a.code[na - 1 - cancel] == -b.code[cancel]) ++cancel;
  std::vector<std::int32_t> out(a.code.begin(), a.code.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.code.begin() + static_cast<std::ptrdiff_t>(cancel), b.code.end());
  return make(std::move(out));
}

Element FreeGroup::invert(const Element& a) const {
  require(a);
  std::vector<std::int32_t> out(a.code.rbegin(), a.code.rend());
  for (auto& x : out) x = -x;
  return make(std::move(out));
}

int FreeGroup::word_length(const Element& a) const {
  require(a);
  return static_cast<int>(a.code.size());
}

Word FreeGroup::to_word(const Element& a) const {
  require(a);
  return Word(a.code.begin(), a.code.end());
}

std::span<const Letter> FreeGroup::letters(const Element& a) const {
  require(a);
  return a.code;
}

std::string FreeGroup::compact(const Word& w) const {
  std::string out;
  for (Letter x : w) {
    const std::string& label = labels()[static_cast<std::size_t>(letter_generator(x))];
    if (label.size() != 1) throw DomainError("compact notation needs single-letter labels");
    out += x > 0 ? label[0] : static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  }
  return out;
}

Word FreeGroup::parse_compact(std::string_view text) const {
  Word w;
  for (char c : text) {
    if (c == ' ') continue;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = std::find(labels().begin(), labels().end(), std::string(1, lower));
    if (it == labels().end()) throw DomainError(std::string("unknown letter '") + c + "' for " + spec());
    const Letter x = static_cast<Letter>(it - labels().begin() + 1);
    w.push_back(std::isupper(static_cast<unsigned char>(c)) ? -x : x);
  }
  return w;
}

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::string spec, int degree, std::vector<Permutation> generators,
                         std::vector<std::string> labels)
    : Group(GroupKind::Finite, std::move(spec)) {
  if (generators.size() != labels.size()) throw DomainError("one label per generator required");
  // The table is searched with the symmetric list (generators and inverses).
  std::vector<Permutation> symmetric;
  auto push = [&](const Permutation& p) {
    if (p == detail::identity_permutation(degree)) return;
    if (std::find(symmetric.begin(), symmetric.end(), p) == symmetric.end()) symmetric.push_back(p);
  };
  for (const auto& g : generators) {
    push(g);
    push(detail::inverse_permutation(g));
  }
  table_ = std::make_unique<detail::PermTable>(degree, symmetric);
  std::vector<Element> named;
  for (const auto& g : generators) named.push_back(make({static_cast<std::int32_t>(*table_->find(g))}));
  std::vector<Element> ball;
  for (std::size_t j = 0; j < table_->generator_count(); ++j) {
    ball.push_back(make({static_cast<std::int32_t>(table_->generator_index(j))}));
  }
  set_generators(std::move(labels), std::move(named), std::move(ball));
}

FiniteGroup::~FiniteGroup() = default;

std::uint32_t FiniteGroup::index(const Element& a) const {
  require(a);
  return static_cast<std::uint32_t>(a.code.at(0));
}

Element FiniteGroup::element(std::uint32_t i) const { return make({static_cast<std::int32_t>(i)}); }

Element FiniteGroup::multiply(const Element& a, const Element& b) const {
  return element(table_->mul(index(a), index(b)));
}

Element FiniteGroup::invert(const Element& a) const { return element(table_->inv(index(a))); }

int FiniteGroup::word_length(const Element& a) const { return table_->length(index(a)); }

Word FiniteGroup::to_word(const Element& a) const {
  // Table positions refer to the symmetric list; map back to named letters.
  Word w;
  for (int pos : table_->word(index(a))) {
    const Element g = element(table_->generator_index(static_cast<std::size_t>(pos)));
    Letter letter = 0;
    for (std::size_t i = 0; i < generators().size() && letter == 0; ++i) {
      if (generators()[i] == g) letter = static_cast<Letter>(i + 1);
    }
    for (std::size_t i = 0; i < generators().size() && letter == 0; ++i) {
      if (invert(generators()[i]) == g) letter = -static_cast<Letter>(i + 1);
    }
    w.push_back(letter);
  }
  return w;
}

std::optional<std::uint64_t> FiniteGroup::order() const { return table_->size(); }

int FiniteGroup::degree() const { return table_->degree(); }

const Permutation& FiniteGroup::permutation(const Element& a) const { return table_->perm(index(a)); }

std::optional<Element> FiniteGroup::from_permutation(const Permutation& p) const {
  Permutation padded = detail::identity_permutation(table_->degree());
  if (p.size() > padded.size()) return std::nullopt;
  std::copy(p.begin(), p.end(), padded.begin());
  auto i = table_->find(padded);
  if (!i) return std::nullopt;
  return element(*i);
}

// ---------------------------------------------------------------- FreeAbelianGroup

FreeAbelianGroup::FreeAbelianGroup(int rank)
    : Group(GroupKind::FreeAbelian, "free_abelian(" + std::to_string(rank) + ")"), rank_(rank) {
  if (rank < 1) throw DomainError("free abelian rank must be positive");
  std::vector<std::string> labels;
  if (rank == 1) {
    labels = {"t"};
  } else if (rank <= 3) {
    for (int i = 0; i < rank; ++i) labels.emplace_back(1, static_cast<char>('x' + i));
  } else {
    for (int i = 0; i < rank; ++i) labels.push_back("x" + std::to_string(i + 1));
  }
  std::vector<Element> named;
  std::vector<Element> ball;
  for (int i = 0; i < rank; ++i) {
    std::vector<std::int32_t> v(static_cast<std::size_t>(rank), 0);
    v[static_cast<std::size_t>(i)] = 1;
    named.push_back(make(v));
    ball.push_back(make(v));
    v[static_cast<std::size_t>(i)] = -1;
    ball.push_back(make(v));
  }
  set_generators(std::move(labels), std::move(named), std::move(ball));
}

Element FreeAbelianGroup::identity() const {
  return make(std::vector<std::int32_t>(static_cast<std::size_t>(rank_), 0));
}

Element FreeAbelianGroup::from_exponents(std::vector<std::int32_t> exponents) const {
  if (static_cast<int>(exponents.size()) != rank_) throw DomainError("exponent vector has wrong rank");
  return make(std::move(exponents));
}

std::span<const std::int32_t> FreeAbelianGroup::exponents(const Element& a) const {
  require(a);
  return a.code;
}

Element FreeAbelianGroup::multiply(const Element& a, const Element& b) const {
  require(a);
  require(b);
  std::vector<std::int32_t> v(a.code);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.code[i];
  return make(std::move(v));
}

Element FreeAbelianGroup::invert(const Element& a) const {
  require(a);
  std::vector<std::int32_t> v(a.code);
  for (auto& x : v) x = -x;
  return make(std::move(v));
}

int FreeAbelianGroup::word_length(const Element& a) const {
  require(a);
  int n = 0;
  for (auto x : a.code) n += x < 0 ? -x : x;
  return n;
}

Word FreeAbelianGroup::to_word(const Element& a) const {
  require(a);
  Word w;
  for (std::size_t i = 0; i < a.code.size(); ++i) {
    const Letter x = static_cast<Letter>(i + 1);
    for (int k = 0; k < (a.code[i] < 0 ? -a.code[i] : a.code[i]); ++k) w.push_back(a.code[i] < 0 ? -x : x);
  }
  return w;
}

// ---------------------------------------------------------------- FreeProductGroup

namespace {

std::string product_spec(const std::vector<GroupPtr>& factors) {
  std::string s = "free_product([";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ", ";
    s += factors[i]->spec();
  }
  return s + "])";
}

}  // namespace

FreeProductGroup::FreeProductGroup(std::vector<GroupPtr> factors)
    : Group(GroupKind::FreeProduct, product_spec(factors)), factors_(std::move(factors)) {
  if (factors_.size() < 2) throw DomainError("a free product needs at least two factors");
  int total = 0;
  for (const auto& f : factors_) {
    if (!f) throw DomainError("null free-product factor");
    if (f->order() == std::uint64_t{1}) throw DomainError("free-product factors must be nontrivial");
    offsets_.push_back(total);
    total += static_cast<int>(f->generators().size());
  }
  std::vector<Element> named;
  std::vector<Element> ball;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Group& f = *factors_[i];
    for (const auto& g : f.generators()) named.push_back(embed(static_cast<int>(i), g));
    if (const auto* fin = dynamic_cast<const FiniteGroup*>(&f)) {
      for (std::uint32_t k = 1; k < *f.order(); ++k) ball.push_back(embed(static_cast<int>(i), fin->element(k)));
    } else if (const auto* au = dynamic_cast<const AscendingUnionGroup*>(&f)) {
      for (const auto& e : au->elements()) {
        if (!au->is_identity(e)) ball.push_back(embed(static_cast<int>(i), e));
      }
    } else {
      for (const auto& g : f.ball_generators()) ball.push_back(embed(static_cast<int>(i), g));
    }
  }
  set_generators(letter_labels(total), std::move(named), std::move(ball));
}

Element FreeProductGroup::encode(const std::vector<Syllable>& syllables) const {
  std::vector<std::int32_t> code;
  for (const auto& s : syllables) {
    code.push_back(s.factor);
    code.push_back(static_cast<std::int32_t>(s.element.code.size()));
    code.insert(code.end(), s.element.code.begin(), s.element.code.end());
  }
  return make(std::move(code));
}

std::vector<Syllable> FreeProductGroup::syllables(const Element& a) const {
  require(a);
  std::vector<Syllable> out;
  std::size_t pos = 0;
  while (pos < a.code.size()) {
    const int f = a.code[pos];
    const auto len = static_cast<std::size_t>(a.code[pos + 1]);
    Element e{factors_[static_cast<std::size_t>(f)]->id(),
              std::vector<std::int32_t>(a.code.begin() + static_cast<std::ptrdiff_t>(pos + 2),
                                        a.code.begin() + static_cast<std::ptrdiff_t>(pos + 2 + len))};
    out.push_back(Syllable{f, std::move(e)});
    pos += 2 + len;
  }
  return out;
}

std::size_t FreeProductGroup::syllable_count(const Element& a) const {
  require(a);
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < a.code.size(); pos += 2 + static_cast<std::size_t>(a.code[pos + 1])) ++n;
  return n;
}

Element FreeProductGroup::from_syllables(std::vector<Syllable> input) const {
  std::vector<Syllable> stack;
  for (auto& s : input) {
    if (s.factor < 0 || s.factor >= static_cast<int>(factors_.size())) throw DomainError("bad factor index");
    const Group& f = *factors_[static_cast<std::size_t>(s.factor)];
    f.require(s.element);
    if (f.is_identity(s.element)) continue;
    if (!stack.empty() && stack.back().factor == s.factor) {
      stack.back().element = f.multiply(stack.back().element, s.element);
      if (f.is_identity(stack.back().element)) stack.pop_back();
    } else {
      stack.push_back(std::move(s));
    }
  }
  return encode(stack);
}

Element FreeProductGroup::embed(int factor, const Element& h) const {
  return from_syllables({Syllable{factor, h}});
}

Element FreeProductGroup::multiply(const Element& a, const Element& b) const {
  auto sa = syllables(a);
  auto sb = syllables(b);
  sa.insert(sa.end(), std::make_move_iterator(sb.begin()), std::make_move_iterator(sb.end()));
  return from_syllables(std::move(sa));
}

Element FreeProductGroup::invert(const Element& a) const {
  auto s = syllables(a);
  std::reverse(s.begin(), s.end());
  for (auto& syl : s) syl.element = factors_[static_cast<std::size_t>(syl.factor)]->invert(syl.element);
  return encode(s);
}

int FreeProductGroup::syllable_cost(const Syllable& s) const {
  const Group& f = *factors_[static_cast<std::size_t>(s.factor)];
  return f.order() ? 1 : f.word_length(s.element);
}

int FreeProductGroup::word_length(const Element& a) const {
  int n = 0;
  for (const auto& s : syllables(a)) n += syllable_cost(s);
  return n;
}

Word FreeProductGroup::to_word(const Element& a) const {
  Word w;
  for (const auto& s : syllables(a)) {
    const int off = offsets_[static_cast<std::size_t>(s.factor)];
    for (Letter x : factors_[static_cast<std::size_t>(s.factor)]->to_word(s.element)) {
      w.push_back(x > 0 ? x + off : x - off);
    }
  }
  return w;
}

// ---------------------------------------------------------------- AscendingUnionGroup

AscendingUnionGroup::AscendingUnionGroup(std::string spec, int degree,
                                         std::vector<std::vector<Permutation>> level_generators,
                                         std::vector<std::vector<std::string>> level_labels)
    : Group(GroupKind::AscendingUnion, std::move(spec)) {
  if (level_generators.empty()) throw DomainError("ascending union needs at least one level");
  if (level_generators.size() != level_labels.size()) throw DomainError("one label list per level required");
  std::vector<Permutation> named_perms;
  std::vector<std::string> labels;
  std::vector<int> generator_level;
  for (std::size_t n = 0; n < level_generators.size(); ++n) {
    if (level_generators[n].size() != level_labels[n].size()) throw DomainError("one label per generator required");
    for (std::size_t j = 0; j < level_generators[n].size(); ++j) {
      named_perms.push_back(level_generators[n][j]);
      labels.push_back(level_labels[n][j]);
      generator_level.push_back(static_cast<int>(n + 1));
    }
  }
  std::vector<Permutation> symmetric;
  std::vector<int> symmetric_level;
  auto push = [&](const Permutation& p, int level) {
    if (p == detail::identity_permutation(degree)) return;
    if (std::find(symmetric.begin(), symmetric.end(), p) != symmetric.end()) return;
    symmetric.push_back(p);
    symmetric_level.push_back(level);
  };
  for (std::size_t i = 0; i < named_perms.size(); ++i) {
    push(named_perms[i], generator_level[i]);
    push(detail::inverse_permutation(named_perms[i]), generator_level[i]);
  }
  table_ = std::make_unique<detail::PermTable>(degree, symmetric);

  // level(g) = first n with g ∈ G_n = <generators of levels ≤ n>.
  const std::size_t order = table_->size();
  levels_.assign(order, 0);
  levels_[0] = 1;
  std::vector<std::uint32_t> reached{0};
  const int depth = static_cast<int>(level_generators.size());
  for (int n = 1; n <= depth; ++n) {
    std::vector<std::uint32_t> gens;
    for (std::size_t j = 0; j < symmetric.size(); ++j) {
      if (symmetric_level[j] <= n) gens.push_back(table_->generator_index(j));
    }
    for (std::size_t head = 0; head < reached.size(); ++head) {
      for (auto s : gens) {
        const auto y = table_->mul(s, reached[head]);
        if (levels_[y] == 0) {
          levels_[y] = n;
          reached.push_back(y);
        }
      }
    }
    level_sizes_.push_back(reached.size());
  }

  std::vector<Element> named;
  for (const auto& p : named_perms) named.push_back(element(*table_->find(p)));
  std::vector<Element> ball;
  for (std::size_t j = 0; j < table_->generator_count(); ++j) ball.push_back(element(table_->generator_index(j)));
  set_generators(std::move(labels), std::move(named), std::move(ball));
}

AscendingUnionGroup::~AscendingUnionGroup() = default;

Element AscendingUnionGroup::element(std::uint32_t index) const {
  return make({levels_[index], static_cast<std::int32_t>(index)});
}

Element AscendingUnionGroup::multiply(const Element& a, const Element& b) const {
  require(a);
  require(b);
  return element(table_->mul(static_cast<std::uint32_t>(a.code[1]), static_cast<std::uint32_t>(b.code[1])));
}

Element AscendingUnionGroup::invert(const Element& a) const {
  require(a);
  return element(table_->inv(static_cast<std::uint32_t>(a.code[1])));
}

int AscendingUnionGroup::word_length(const Element& a) const {
  require(a);
  return table_->length(static_cast<std::uint32_t>(a.code[1]));
}

Word AscendingUnionGroup::to_word(const Element& a) const {
  require(a);
  Word w;
  for (int pos : table_->word(static_cast<std::uint32_t>(a.code[1]))) {
    const Element g = element(table_->generator_index(static_cast<std::size_t>(pos)));
    Letter letter = 0;
    for (std::size_t i = 0; i < generators().size() && letter == 0; ++i) {
      if (generators()[i] == g) letter = static_cast<Letter>(i + 1);
    }
    for (std::size_t i = 0; i < generators().size() && letter == 0; ++i) {
      if (invert(generators()[i]) == g) letter = -static_cast<Letter>(i + 1);
    }
    w.push_back(letter);
  }
  return w;
}

std::optional<std::uint64_t> AscendingUnionGroup::order() const { return table_->size(); }

int AscendingUnionGroup::level(const Element& a) const {
  require(a);
  return a.code[0];
}

std::uint64_t AscendingUnionGroup::level_size(int n) const {
  if (n < 1 || n > depth()) throw RangeError("level outside the truncation");
  return level_sizes_[static_cast<std::size_t>(n - 1)];
}

std::vector<Element> AscendingUnionGroup::elements() const {
  std::vector<Element> out;
  out.reserve(table_->size());
  for (std::uint32_t i = 0; i < table_->size(); ++i) out.push_back(element(i));
  return out;
}

const Permutation& AscendingUnionGroup::permutation(const Element& a) const {
  require(a);
  return table_->perm(static_cast<std::uint32_t>(a.code[1]));
}

std::optional<Element> AscendingUnionGroup::from_permutation(const Permutation& p) const {
  Permutation padded = detail::identity_permutation(table_->degree());
  if (p.size() > padded.size()) return std::nullopt;
  std::copy(p.begin(), p.end(), padded.begin());
  auto i = table_->find(padded);
  if (!i) return std::nullopt;
  return element(*i);
}

// ---------------------------------------------------------------- factories

GroupPtr free_group(int rank) { return std::make_shared<FreeGroup>(rank); }

GroupPtr free_abelian_group(int rank) { return std::make_shared<FreeAbelianGroup>(rank); }

GroupPtr cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic order must be positive");
  Permutation gen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) gen[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
  return std::make_shared<FiniteGroup>("cyclic(" + std::to_string(n) + ")", n, std::vector<Permutation>{gen},
                                       std::vector<std::string>{"a"});
}

GroupPtr symmetric_group(int n) {
  if (n < 2) throw DomainError("sym(n) needs n >= 2");
  std::vector<Permutation> gens;
  std::vector<std::string> labels;
  for (int i = 0; i + 1 < n; ++i) {
    Permutation p = detail::identity_permutation(n);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
    gens.push_back(p);
    labels.push_back("s" + std::to_string(i + 1));
  }
  return std::make_shared<FiniteGroup>("sym(" + std::to_string(n) + ")", n, std::move(gens), std::move(labels));
}

GroupPtr free_product(std::vector<GroupPtr> factors) {
  return std::make_shared<FreeProductGroup>(std::move(factors));
}

GroupPtr sum_z2_chain(int depth) {
  if (depth < 1) throw DomainError("chain depth must be positive");
  const int degree = 2 * depth;
  std::vector<std::vector<Permutation>> gens;
  std::vector<std::vector<std::string>> labels;
  for (int n = 0; n < depth; ++n) {
    Permutation p = detail::identity_permutation(degree);
    std::swap(p[static_cast<std::size_t>(2 * n)], p[static_cast<std::size_t>(2 * n + 1)]);
    gens.push_back({p});
    labels.push_back({"e" + std::to_string(n + 1)});
  }
  return std::make_shared<AscendingUnionGroup>("ascending_union(sum_z2, " + std::to_string(depth) + ")", degree,
                                               std::move(gens), std::move(labels));
}

GroupPtr symmetric_chain(int depth) {
  if (depth < 1) throw DomainError("chain depth must be positive");
  std::vector<std::vector<Permutation>> gens(1);
  std::vector<std::vector<std::string>> labels(1);
  for (int n = 2; n <= depth; ++n) {
    Permutation p = detail::identity_permutation(depth);
    std::swap(p[static_cast<std::size_t>(n - 2)], p[static_cast<std::size_t>(n - 1)]);
    gens.push_back({p});
    labels.push_back({"s" + std::to_string(n - 1)});
  }
  return std::make_shared<AscendingUnionGroup>("ascending_union(sym, " + std::to_string(depth) + ")", depth,
                                               std::move(gens), std::move(labels));
}

}  // namespace ends
