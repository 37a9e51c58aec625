#pragma once

#include <compare>
#include <string>
#include <vector>

namespace algtheta {

/// A cofinite additive submonoid of the natural numbers.
class NumericalSemigroup {
 public:
  /// Throws Error "not a numerical semigroup" when the gcd is not 1.
  static NumericalSemigroup from_generators(std::vector<int> generators);
  /// The semigroup whose complement is `gaps`; throws if that set is not closed.
  static NumericalSemigroup from_gaps(std::vector<int> gaps);

  /// Minimal generators, ascending.
  const std::vector<int>& generators() const { return generators_; }
  /// Gaps, ascending.
  const std::vector<int>& gaps() const { return gaps_; }
  int delta() const { return static_cast<int>(gaps_.size()); }
  int conductor() const { return gaps_.empty() ? 0 : gaps_.back() + 1; }
  int multiplicity() const { return generators_.front(); }
  bool contains(int n) const;
  /// w not in H iff 2 delta - 1 - w in H.
  bool is_gorenstein() const;

  /// "<4,5,6>"
  std::string to_string() const;
  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }

 private:
  explicit NumericalSemigroup(std::vector<int> gaps);
  std::vector<int> gaps_;
  std::vector<int> generators_;
  std::vector<bool> member_;  // up to conductor + multiplicity
};

class Partition {
 public:
  Partition() = default;
  /// Throws Error unless the parts are positive and weakly decreasing (zeros are dropped).
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  /// lambda_i with 1-based i; 0 beyond the length.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  /// Componentwise lambda_i <= other_i.
  bool contained_in(const Partition& other) const;
  /// Hook-length product.
  long long hook_product() const;

  /// "(4,1,1,1)"; the empty partition is "()".
  std::string to_string() const;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing m_i = lambda_i - i, stored for i = 1..length(lambda).
struct MayaDiagram {
  std::vector<int> prefix;
  /// m_i for any i >= 1.
  int at(std::size_t i) const { return i <= prefix.size() ? prefix[i - 1] : -static_cast<int>(i); }
  bool operator==(const MayaDiagram&) const = default;
};

MayaDiagram maya(const Partition& lambda);
Partition from_maya(const MayaDiagram& m);

/// lambda_i = w_{delta+1-i} - (delta - i).
Partition partition_from_gaps(const NumericalSemigroup& s);

/// Every symmetric semigroup with 1 <= delta <= delta_max (at most 8), ordered by
/// delta and then by gap set.
std::vector<NumericalSemigroup> enumerate_gorenstein(int delta_max);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// "<4,5,6>" or "4,5,6"; throws InputError when malformed.
std::vector<int> parse_generator_list(const std::string& text);
/// "(4,1,1,1)"; throws InputError when malformed.
Partition parse_partition(const std::string& text);

}  // namespace algtheta
