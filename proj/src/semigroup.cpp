#include "algtheta/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "algtheta/error.hpp"

namespace algtheta {

NumericalSemigroup::NumericalSemigroup(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  std::sort(gaps_.begin(), gaps_.end());
  gaps_.erase(std::unique(gaps_.begin(), gaps_.end()), gaps_.end());
  if (!gaps_.empty() && gaps_.front() < 1) throw Error("gaps must be positive");
  const int c = conductor();
  int m = 1;
  while (std::binary_search(gaps_.begin(), gaps_.end(), m)) ++m;
  member_.assign(static_cast<std::size_t>(c + m + 1), true);
  for (int w : gaps_) member_[w] = false;
  for (int a = 1; a < static_cast<int>(member_.size()); ++a)
    for (int b = a; a + b < static_cast<int>(member_.size()); ++b)
      if (member_[a] && member_[b] && !member_[a + b])
        throw Error("gap set is not the complement of a semigroup");
  for (int h = 1; h < static_cast<int>(member_.size()); ++h) {
    if (!member_[h]) continue;
    bool decomposable = false;
    for (int a = 1; a <= h / 2 && !decomposable; ++a) decomposable = member_[a] && member_[h - a];
    if (!decomposable) generators_.push_back(h);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> gens) {
  int g = 0;
  for (int x : gens) {
    if (x < 1) throw InputError("generators must be positive integers");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error("not a numerical semigroup");
  const int lo = *std::min_element(gens.begin(), gens.end());
  const int hi = *std::max_element(gens.begin(), gens.end());
  const int limit = lo * hi + 1;
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  for (int n = 1; n < limit; ++n)
    for (int x : gens)
      if (x <= n && in[n - x]) {
        in[n] = true;
        break;
      }
  std::vector<int> gaps;
  for (int n = 1; n < limit; ++n)
    if (!in[n]) gaps.push_back(n);
  return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps) {
  return NumericalSemigroup(std::move(gaps));
}

bool NumericalSemigroup::contains(int n) const {
  if (n < 0) return false;
  if (n >= conductor()) return true;
  return member_[n];
}

bool NumericalSemigroup::is_gorenstein() const {
  const int d = delta();
  for (int w = 0; w < 2 * d; ++w)
    if (contains(w) == contains(2 * d - 1 - w)) return false;
  return true;
}

std::string NumericalSemigroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + std::to_string(generators_[i]);
  return s + ">";
}

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw Error("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (std::size_t i = 0; i < length(); ++i)
    if (parts_[i] > other.parts_[i]) return false;
  return true;
}

long long Partition::hook_product() const {
  const Partition c = conjugate();
  long long h = 1;
  for (std::size_t i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) h *= part(i) - j + c.part(static_cast<std::size_t>(j)) - static_cast<int>(i) + 1;
  return h;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

MayaDiagram maya(const Partition& lambda) {
  MayaDiagram m;
  for (std::size_t i = 1; i <= lambda.length(); ++i) m.prefix.push_back(lambda.part(i) - static_cast<int>(i));
  return m;
}

Partition from_maya(const MayaDiagram& m) {
  std::vector<int> parts;
  for (std::size_t i = 1; i <= m.prefix.size(); ++i) {
    if (i > 1 && m.prefix[i - 1] >= m.prefix[i - 2]) throw Error("Maya diagram must be strictly decreasing");
    parts.push_back(m.prefix[i - 1] + static_cast<int>(i));
  }
  return Partition(std::move(parts));
}

Partition partition_from_gaps(const NumericalSemigroup& s) {
  const int d = s.delta();
  std::vector<int> parts;
  for (int i = 1; i <= d; ++i) parts.push_back(s.gaps()[d - i] - (d - i));
  return Partition(std::move(parts));
}

std::vector<NumericalSemigroup> enumerate_gorenstein(int delta_max) {
  if (delta_max > 8) throw Error("enumerate_gorenstein: delta_max above 8");
  std::vector<NumericalSemigroup> out;
  for (int d = 1; d <= delta_max; ++d) {
    // One of w, 2d-1-w is a gap for each w in [1, d-1]; 2d-1 always is.
    std::vector<std::vector<int>> candidates;
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
      std::vector<int> gaps{2 * d - 1};
      for (int w = 1; w < d; ++w) gaps.push_back((mask >> (w - 1)) & 1u ? 2 * d - 1 - w : w);
      std::sort(gaps.begin(), gaps.end());
      candidates.push_back(std::move(gaps));
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto& gaps : candidates) {
      bool closed = true;
      auto gap = [&](int n) { return std::binary_search(gaps.begin(), gaps.end(), n); };
      for (int a = 1; a < 2 * d && closed; ++a)
        for (int b = a; a + b < 2 * d && closed; ++b)
          if (!gap(a) && !gap(b) && gap(a + b)) closed = false;
      if (closed) out.push_back(NumericalSemigroup::from_gaps(gaps));
    }
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<int> parse_int_list(std::string text, char open, char close) {
  text.erase(std::remove_if(text.begin(), text.end(), [](char ch) { return ch == ' '; }), text.end());
  if (!text.empty() && text.front() == open) {
    if (text.back() != close) throw InputError("unbalanced brackets in \"" + text + "\"");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> values;
  if (text.empty()) return values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed integer list \"" + text + "\"");
    values.push_back(std::stoi(item));
  }
  return values;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<int> parse_generator_list(const std::string& text) { return parse_int_list(text, '<', '>'); }

Partition parse_partition(const std::string& text) {
  try {
    return Partition(parse_int_list(text, '(', ')'));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

}  // namespace algtheta
