#ifndef AREBA_QUEUES_HPP
#define AREBA_QUEUES_HPP

#include <cstddef>
#include <deque>
#include <vector>

#include "areba/class_size.hpp"
#include "areba/example.hpp"

namespace areba {

/// FIFO buffer holding the most recent examples of one class. Appending past
/// capacity evicts the oldest item; shrinking the capacity truncates from the
/// oldest end so the newest examples always survive.
class BoundedQueue {
public:
    explicit BoundedQueue(std::size_t cap = 1);

    void append(const LabeledExample& example);
    void set_capacity(std::size_t new_cap);

    std::size_t capacity() const { return cap_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool full() const { return items_.size() >= cap_; }

    // Oldest first.
    const std::deque<LabeledExample>& items() const { return items_; }

private:
    std::size_t cap_;
    std::deque<LabeledExample> items_;
};

/// Per-class queue pair sharing a total budget of B slots. Two capacity
/// policies operate on this state:
//
///  - qbr_append: both capacities start at 1 and grow by one whenever the
///    arriving class's queue is full and still below B/2, converging to an
///    even B/2 + B/2 split.
///  - areba_append: capacities adapt to the tracked class sizes. While one
///    queue is empty the other may use the whole budget; once both classes
///    have appeared, the minority queue's capacity grows toward B/2 and the
///    majority queue keeps one slot less until both settle at B/2.
class BalancedQueues {
public:
    explicit BalancedQueues(std::size_t total_budget);

    // Appends to the matching class queue and applies the QBR capacity rule.
    void qbr_append(const LabeledExample& example);

    // Appends to the matching class queue and adapts both capacities from
    // the tracker's minority/majority roles.
    void areba_append(const LabeledExample& example, const ClassSizeTracker& tracker);

    // Both queues concatenated (negatives then positives), oldest first.
    std::vector<LabeledExample> training_set() const;

    std::size_t total_budget() const { return budget_; }
    std::size_t total_size() const { return q_p_.size() + q_n_.size(); }
    const BoundedQueue& positives() const { return q_p_; }
    const BoundedQueue& negatives() const { return q_n_; }

private:
    BoundedQueue& queue_for(int y) { return y == 1 ? q_p_ : q_n_; }

    std::size_t budget_;
    BoundedQueue q_p_;
    BoundedQueue q_n_;
};

}  // namespace areba

#endif
