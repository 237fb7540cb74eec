#include "higgsmot/partition.hpp"

#include <functional>

#include "higgsmot/errors.hpp"

namespace higgsmot {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw InvalidArgument("Partition: parts must be positive and weakly decreasing");
    }
    size_ += parts_[k];
  }
  if (!parts_.empty()) {
    conjugate_.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int i = 0; i < p; ++i) ++conjugate_[static_cast<std::size_t>(i)];
    }
  }
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_partitions(int n_max) {
  if (n_max < 0) throw InvalidArgument("enumerate_partitions: n_max must be nonnegative");
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

ArmLeg arm_leg(const Partition& lambda, int i, int j) {
  if (!lambda.contains(i, j)) {
    throw BoxOutsideDiagram("box (" + std::to_string(i) + ", " + std::to_string(j) + ") is not in " +
                            lambda.to_string());
  }
  return {lambda.row(j) - i, lambda.column(i) - j};
}

int pairing(const Partition& lambda) {
  int s = 0;
  for (int c : lambda.conjugate_parts()) s += c * c;
  return s;
}

BlockData block_data(const Partition& lambda) {
  BlockData out;
  const int t = lambda.empty() ? 0 : lambda.parts().front();
  out.multiplicities.assign(static_cast<std::size_t>(t), 0);
  for (int p : lambda.parts()) ++out.multiplicities[static_cast<std::size_t>(p - 1)];
  out.prefix.assign(static_cast<std::size_t>(t + 1), 0);
  for (int k = 0; k < t; ++k) {
    out.prefix[static_cast<std::size_t>(k + 1)] = out.prefix[static_cast<std::size_t>(k)] + out.multiplicities[static_cast<std::size_t>(k)];
  }
  out.n = out.prefix.back();
  for (int k = 0; k < t; ++k) {
    for (int m = 0; m < out.multiplicities[static_cast<std::size_t>(k)]; ++m) out.block.push_back(k + 1);
  }
  return out;
}

}  // namespace higgsmot
