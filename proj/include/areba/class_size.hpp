#ifndef AREBA_CLASS_SIZE_HPP
#define AREBA_CLASS_SIZE_HPP

#include <stdexcept>

namespace areba {

/// Time-decayed per-class example counts. Both sizes decay by theta each
/// step and the arriving class gains (1 - theta), so after t updates from
/// zero the sizes satisfy s_p + s_n = 1 - theta^t exactly. The class with
/// the smaller size is treated as the current minority.
class ClassSizeTracker {
public:
    explicit ClassSizeTracker(double theta = 0.99) : theta_(theta) {
        if (theta <= 0.0 || theta >= 1.0) {
            throw std::invalid_argument("ClassSizeTracker: theta must lie in (0,1)");
        }
    }

    void update(int y) {
        if (y != 0 && y != 1) {
            throw std::invalid_argument("ClassSizeTracker: label must be 0 or 1");
        }
        s_p_ = theta_ * s_p_ + (y == 1 ? 1.0 - theta_ : 0.0);
        s_n_ = theta_ * s_n_ + (y == 0 ? 1.0 - theta_ : 0.0);
        ++t_;
    }

    double s_p() const { return s_p_; }
    double s_n() const { return s_n_; }
    double theta() const { return theta_; }
    long t() const { return t_; }

    // Ties count as negative-minority so callers can branch on a single
    // predicate without re-deciding the tie rule.
    bool negative_is_minority() const { return s_n_ <= s_p_; }

private:
    double theta_;
    double s_p_ = 0.0;
    double s_n_ = 0.0;
    long t_ = 0;
};

}  // namespace areba

#endif
