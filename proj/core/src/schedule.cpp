#include "meshflow/schedule.hpp"

#include <sstream>

namespace meshflow {

namespace {

// Endpoint sharing or sender-in-range-of-receiver, with neighborhoods taken
// from the physical graph regardless of any routing deletions.
inline bool conflicts_unchecked(const ConnectivityGraph& g, const Link& a, const Link& b) {
    if (a.from == b.from || a.from == b.to || a.to == b.from || a.to == b.to) return true;
    return g.adjacent(b.from, a.to) || g.adjacent(a.from, b.to);
}

void require_link(const ConnectivityGraph& g, const Link& link) {
    if (!g.has_link(link.from, link.to)) {
        throw MissingLink("link (" + std::to_string(link.from) + "," + std::to_string(link.to) +
                          ") not in graph");
    }
}

}  // namespace

bool conflicts(const ConnectivityGraph& g, const Link& a, const Link& b) {
    require_link(g, a);
    require_link(g, b);
    return conflicts_unchecked(g, a, b);
}

bool slot_feasible(const ConnectivityGraph& g, const TimeSlot& slot, const Link& link) {
    for (const Allocation& alloc : slot.allocations) {
        if (conflicts_unchecked(g, alloc.link, link)) return false;
    }
    return true;
}

AllocationPlan spatial_reuse(const Schedule& sched, const ConnectivityGraph& g, const Link& link,
                             const Duration& needed) {
    require_link(g, link);
    if (needed <= 0) throw InvariantError("spatial_reuse: needed duration must be positive");

    AllocationPlan plan;
    plan.base_revision = sched.revision();
    plan.delta = 0;

    std::vector<const TimeSlot*> collected;
    Duration available = 0;
    for (const TimeSlot& slot : sched.slots()) {
        if (!slot_feasible(g, slot, link)) continue;
        collected.push_back(&slot);
        available += slot.duration;
        if (available >= needed) break;
    }

    const int next_id = sched.next_slot_id();
    if (collected.empty()) {
        plan.created.push_back({next_id, needed});
        plan.delta = needed;
        return plan;
    }

    if (available > needed) {
        // Overshoot: split the last collected slot so the total is exact.
        const TimeSlot* last = collected.back();
        const Duration excess = available - needed;
        const Duration keep = last->duration - excess;
        plan.splits.push_back({last->id, keep, next_id});
        for (const TimeSlot* slot : collected) {
            plan.reused.push_back({slot->id, slot == last ? keep : slot->duration});
        }
        return plan;
    }

    for (const TimeSlot* slot : collected) {
        plan.reused.push_back({slot->id, slot->duration});
    }
    const Duration shortfall = needed - available;
    if (shortfall > 0) {
        plan.created.push_back({next_id, shortfall});
        plan.delta = shortfall;
    }
    return plan;
}

const TimeSlot& Schedule::slot(int id) const {
    if (id < 0 || id >= static_cast<int>(slots_.size())) {
        throw InvariantError("no slot with id " + std::to_string(id));
    }
    return slots_[id];
}

Schedule::Undo Schedule::apply_with_undo(const AllocationPlan& plan, const Link& link) {
    if (plan.base_revision != revision_) {
        throw StalePlan("plan was computed against schedule revision " +
                        std::to_string(plan.base_revision) + ", current is " +
                        std::to_string(revision_));
    }
    Undo record;

    for (const SlotSplit& split : plan.splits) {
        if (split.slot_id < 0 || split.slot_id >= static_cast<int>(slots_.size()) ||
            split.fragment_id != next_slot_id()) {
            throw StalePlan("split does not match schedule state");
        }
        TimeSlot& original = slots_[split.slot_id];
        record.split_slot_id = split.slot_id;
        record.split_original_duration = original.duration;

        TimeSlot fragment;
        fragment.id = split.fragment_id;
        fragment.duration = original.duration - split.keep_duration;
        original.duration = split.keep_duration;
        // prior links keep their time: they get both fragments
        fragment.allocations.reserve(original.allocations.size());
        for (Allocation& alloc : original.allocations) {
            fragment.allocations.push_back(
                {alloc.link, alloc.link.capacity_mbps * fragment.duration});
            alloc.flow_mb = alloc.link.capacity_mbps * original.duration;
        }
        slots_.push_back(std::move(fragment));
        ++record.appended;
    }

    for (const SlotUse& use : plan.reused) {
        if (use.slot_id < 0 || use.slot_id >= static_cast<int>(slots_.size())) {
            throw StalePlan("reused slot missing");
        }
        TimeSlot& slot = slots_[use.slot_id];
        if (slot.duration != use.duration) {
            throw StalePlan("reused slot duration changed since planning");
        }
        slot.allocations.push_back({link, link.capacity_mbps * slot.duration});
        record.reused_slot_ids.push_back(use.slot_id);
    }

    for (const SlotCreate& create : plan.created) {
        if (create.slot_id != next_slot_id()) {
            throw StalePlan("created slot id does not match schedule state");
        }
        TimeSlot slot;
        slot.id = create.slot_id;
        slot.duration = create.duration;
        slot.allocations.push_back({link, link.capacity_mbps * create.duration});
        slots_.push_back(std::move(slot));
        ++record.appended;
    }

    ++revision_;
    return record;
}

void Schedule::undo(const Undo& record) {
    for (std::size_t i = 0; i < record.appended; ++i) slots_.pop_back();
    for (int slot_id : record.reused_slot_ids) {
        slots_[slot_id].allocations.pop_back();
    }
    if (record.split_slot_id >= 0) {
        TimeSlot& slot = slots_[record.split_slot_id];
        slot.duration = record.split_original_duration;
        for (Allocation& alloc : slot.allocations) {
            alloc.flow_mb = alloc.link.capacity_mbps * slot.duration;
        }
    }
    --revision_;
}

void apply_plan(Schedule& sched, const AllocationPlan& plan, const Link& link) {
    sched.apply_with_undo(plan, link);
}

Duration total_duration(const Schedule& sched) {
    Duration total = 0;
    for (const TimeSlot& slot : sched.slots()) total += slot.duration;
    return total;
}

std::string dump_schedule(const Schedule& sched) {
    std::ostringstream out;
    for (const TimeSlot& slot : sched.slots()) {
        out << "slot " << slot.id << ' ' << to_fraction(slot.duration) << " :";
        for (const Allocation& alloc : slot.allocations) {
            out << ' ' << alloc.link.from << "->" << alloc.link.to << '@'
                << to_fraction(alloc.link.capacity_mbps);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace meshflow
