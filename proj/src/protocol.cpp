#include "netopt/protocol.hpp"

#include "netopt/errors.hpp"

namespace netopt {

EstimateList EstimateList::initial(const std::vector<Eigen::VectorXd>& values) {
  EstimateList list;
  list.entries_.reserve(values.size());
  for (const auto& v : values) list.entries_.push_back({v, 0, 0, 0});
  return list;
}

const EstimateEntry& EstimateList::entry(int slot) const {
  if (slot < 0 || slot >= size()) throw ProtocolError("estimate list: slot out of range");
  return entries_[static_cast<std::size_t>(slot)];
}

void EstimateList::stamp_own(int slot, Eigen::VectorXd value, std::int64_t stamp,
                             std::int64_t origin_tick, std::int64_t basis_tick) {
  if (slot < 0 || slot >= size()) throw ProtocolError("estimate list: slot out of range");
  auto& own = entries_[static_cast<std::size_t>(slot)];
  if (stamp <= own.stamp)
    throw ProtocolError("estimate list: own stamp must strictly increase");
  if (value.size() != own.value.size())
    throw ProtocolError("estimate list: own entry dimension changed");
  own = {std::move(value), stamp, origin_tick, basis_tick};
}

void EstimateList::merge_from(const EstimateList& received) {
  if (received.size() != size())
    throw ProtocolError("estimate list merge: slot count mismatch");
  for (int k = 0; k < size(); ++k) {
    const auto& theirs = received.entries_[static_cast<std::size_t>(k)];
    auto& ours = entries_[static_cast<std::size_t>(k)];
    if (theirs.value.size() != ours.value.size())
      throw ProtocolError("estimate list merge: entry dimension mismatch");
    if (theirs.stamp > ours.stamp) ours = theirs;
  }
}

EstimateList merge(EstimateList local, const std::vector<EstimateList>& received) {
  for (const auto& list : received) local.merge_from(list);
  return local;
}

}  // namespace netopt
