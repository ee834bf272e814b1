#pragma once

#include "meshflow/graph.hpp"
#include "meshflow/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace meshflow {

/// Seconds, exact.
using Duration = Rational;

/// One link transmitting for the whole duration of a slot. The flow is always
/// capacity * slot duration: links transmit at full rate or not at all.
struct Allocation {
    Link link;
    Rational flow_mb;
};

/// Variable-duration slot; every pair of allocations it carries is
/// conflict-free.
struct TimeSlot {
    int id = -1;  // creation order, equals the slot's index in the frame
    Duration duration;
    std::vector<Allocation> allocations;
};

struct SlotUse {
    int slot_id;
    Duration duration;  // the slot's (post-split) duration
};

struct SlotSplit {
    int slot_id;
    Duration keep_duration;  // first fragment, allocated to the request
    int fragment_id;         // second fragment, carries the prior links only
};

struct SlotCreate {
    int slot_id;
    Duration duration;
};

/// Pure description of how a (link, needed-duration) request maps onto the
/// frame: slots reused as-is, at most one split, new slots created. delta is
/// the newly created duration, i.e. the request's cost in added frame time.
struct AllocationPlan {
    std::uint64_t base_revision = 0;
    std::vector<SlotUse> reused;
    std::vector<SlotSplit> splits;
    std::vector<SlotCreate> created;
    Duration delta;
};

/// Ordered frame of time slots. Single-owner mutable; cheap to copy for
/// tentative extension during path search.
class Schedule {
public:
    const std::vector<TimeSlot>& slots() const { return slots_; }
    bool empty() const { return slots_.empty(); }
    std::uint64_t revision() const { return revision_; }
    int next_slot_id() const { return static_cast<int>(slots_.size()); }

    const TimeSlot& slot(int id) const;

    /// Undo bookkeeping for backtracking search: enough to restore the exact
    /// pre-apply state, revision included.
    struct Undo {
        std::vector<int> reused_slot_ids;
        int split_slot_id = -1;
        Duration split_original_duration;
        std::size_t appended = 0;
    };

    Undo apply_with_undo(const AllocationPlan& plan, const Link& link);
    void undo(const Undo& record);

private:
    friend void apply_plan(Schedule&, const AllocationPlan&, const Link&);

    std::vector<TimeSlot> slots_;
    std::uint64_t revision_ = 0;
};

/// True iff the two directed links cannot share a time slot: they touch a
/// common node, or either sender is within range of the other's receiver.
/// Symmetric; a link conflicts with itself. Throws MissingLink when either
/// link is not in the graph.
bool conflicts(const ConnectivityGraph& g, const Link& a, const Link& b);

/// True iff `link` conflicts with no allocation already in `slot`.
bool slot_feasible(const ConnectivityGraph& g, const TimeSlot& slot, const Link& link);

/// Greedy first-fit allocation of `needed` seconds for `link`: scans slots in
/// creation order collecting feasible ones until their total covers the
/// request, splitting the last collected slot when the total overshoots, and
/// creating a new slot for any shortfall. Pure: the schedule is not modified.
AllocationPlan spatial_reuse(const Schedule& sched, const ConnectivityGraph& g, const Link& link,
                             const Duration& needed);

/// Executes a plan produced against the schedule's current revision; throws
/// StalePlan otherwise. Split fragments inherit every prior allocation of the
/// split slot, so no link loses time.
void apply_plan(Schedule& sched, const AllocationPlan& plan, const Link& link);

/// Exact frame length.
Duration total_duration(const Schedule& sched);

/// One line per slot in creation order:
///   slot <id> <duration> : <from>-><to>@<cap> ...
/// Durations and capacities printed as exact fractions.
std::string dump_schedule(const Schedule& sched);

}  // namespace meshflow
