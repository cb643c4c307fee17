#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace netopt {

/// One slot of an estimate list. `stamp` is the producer's local update
/// count (agents never see the global clock); `origin_tick` is the global
/// tick of production and `basis_tick` the production tick of the value
/// the producer evaluated at — both carried for the verifier only.
struct EstimateEntry {
  Eigen::VectorXd value;
  std::int64_t stamp = 0;
  std::int64_t origin_tick = 0;
  std::int64_t basis_tick = 0;
};

/// An agent's timestamped cache of the newest known value from every
/// producer slot. In optimization mode there are D slots (slot k = agent
/// k's estimate); in consensus mode D+1 slots (slot 0 = the arbiter's
/// solution estimate, slots 1..D = local gradients). Lists are value
/// types: snapshots placed into messages are deep copies.
class EstimateList {
public:
  EstimateList() = default;

  static EstimateList initial(const std::vector<Eigen::VectorXd>& values);

  int size() const { return static_cast<int>(entries_.size()); }
  const EstimateEntry& entry(int slot) const;

  /// Replaces the holder's own slot. The stamp must strictly increase.
  void stamp_own(int slot, Eigen::VectorXd value, std::int64_t stamp,
                 std::int64_t origin_tick, std::int64_t basis_tick);

  /// Slot-wise newest-stamp merge; equal stamps keep the local entry.
  /// Throws ProtocolError on slot-count or dimension mismatch.
  void merge_from(const EstimateList& received);

private:
  std::vector<EstimateEntry> entries_;
};

/// Merge of a local list with any number of received snapshots.
EstimateList merge(EstimateList local, const std::vector<EstimateList>& received);

}  // namespace netopt
