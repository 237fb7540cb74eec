#ifndef HIGGSMOT_PARTITION_HPP
#define HIGGSMOT_PARTITION_HPP

#include <string>
#include <utility>
#include <vector>

namespace higgsmot {

// A partition lambda_1 >= ... >= lambda_l > 0. Boxes are (i, j) with
// 1 <= i <= lambda_j: j is the row, i the position inside the row.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  const std::vector<int>& conjugate_parts() const { return conjugate_; }
  Partition conjugate() const { return Partition(conjugate_); }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Row j has lambda_j boxes (1-based); zero past the last row.
  int row(int j) const { return j >= 1 && j <= length() ? parts_[static_cast<std::size_t>(j - 1)] : 0; }
  // Column i has lambda'_i boxes.
  int column(int i) const {
    return i >= 1 && i <= static_cast<int>(conjugate_.size()) ? conjugate_[static_cast<std::size_t>(i - 1)] : 0;
  }
  bool contains(int i, int j) const { return j >= 1 && i >= 1 && i <= row(j); }

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> conjugate_;
  int size_ = 0;
};

// Every partition of size <= n_max, grouped by size, each size in
// reverse-lexicographic order; the empty partition comes first.
std::vector<Partition> enumerate_partitions(int n_max);
// Partitions of exactly n.
std::vector<Partition> partitions_of(int n);

struct ArmLeg {
  int arm = 0;
  int leg = 0;
};

// Arm: boxes strictly right of (i, j) in its row; leg: boxes strictly above
// it in its column. Throws BoxOutsideDiagram.
ArmLeg arm_leg(const Partition& lambda, int i, int j);

// <lambda, lambda> = sum_i (lambda'_i)^2.
int pairing(const Partition& lambda);

// lambda = 1^{r_1} 2^{r_2} ... t^{r_t}.
struct BlockData {
  std::vector<int> multiplicities;  // r_1 .. r_t
  std::vector<int> prefix;          // r_{<1} .. r_{<t+1}
  std::vector<int> block;           // b(1) .. b(n): the unique j with r_{<j} < m <= r_{<j+1}
  int n = 0;                        // r_1 + ... + r_t, the number of parts
};
BlockData block_data(const Partition& lambda);

}  // namespace higgsmot

#endif  // HIGGSMOT_PARTITION_HPP
