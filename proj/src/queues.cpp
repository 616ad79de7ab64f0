#include "areba/queues.hpp"

#include <stdexcept>

namespace areba {

BoundedQueue::BoundedQueue(std::size_t cap) : cap_(cap) {
    if (cap < 1) {
        throw std::invalid_argument("BoundedQueue: capacity must be at least 1");
    }
}

void BoundedQueue::append(const LabeledExample& example) {
    items_.push_back(example);
    while (items_.size() > cap_) {
        items_.pop_front();
    }
}

void BoundedQueue::set_capacity(std::size_t new_cap) {
    if (new_cap < 1) {
        throw std::invalid_argument("BoundedQueue: capacity must be at least 1");
    }
    cap_ = new_cap;
    while (items_.size() > cap_) {
        items_.pop_front();
    }
}

BalancedQueues::BalancedQueues(std::size_t total_budget)
    : budget_(total_budget), q_p_(1), q_n_(1) {
    if (total_budget < 2 || total_budget % 2 != 0) {
        throw std::invalid_argument("BalancedQueues: total budget must be an even integer >= 2");
    }
}

void BalancedQueues::qbr_append(const LabeledExample& example) {
    BoundedQueue& q = queue_for(example.y);
    q.append(example);
    if (q.full() && q.capacity() < budget_ / 2) {
        q.set_capacity(q.capacity() + 1);
    }
}

void BalancedQueues::areba_append(const LabeledExample& example, const ClassSizeTracker& tracker) {
    queue_for(example.y).append(example);

    const std::size_t half = budget_ / 2;
    if (q_p_.empty()) {
        // Only negatives seen so far: let their queue use the whole budget.
        if (q_n_.capacity() < budget_) {
            q_n_.set_capacity(q_n_.capacity() + 1);
        }
    } else if (q_n_.empty()) {
        if (q_p_.capacity() < budget_) {
            q_p_.set_capacity(q_p_.capacity() + 1);
        }
    } else {
        BoundedQueue& minority = tracker.negative_is_minority() ? q_n_ : q_p_;
        BoundedQueue& majority = tracker.negative_is_minority() ? q_p_ : q_n_;
        if (minority.full()) {
            if (minority.capacity() < half) {
                // Shift one slot of the budget from the majority to the
                // minority; the majority queue drops its oldest example.
                minority.set_capacity(minority.capacity() + 1);
                majority.set_capacity(minority.capacity() - 1);
            } else {
                minority.set_capacity(half);
                majority.set_capacity(half);
            }
        }
    }
}

std::vector<LabeledExample> BalancedQueues::training_set() const {
    std::vector<LabeledExample> out;
    out.reserve(q_n_.size() + q_p_.size());
    out.insert(out.end(), q_n_.items().begin(), q_n_.items().end());
    out.insert(out.end(), q_p_.items().begin(), q_p_.items().end());
    return out;
}

}  // namespace areba
