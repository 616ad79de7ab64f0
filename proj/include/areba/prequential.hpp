#ifndef AREBA_PREQUENTIAL_HPP
#define AREBA_PREQUENTIAL_HPP

#include <cmath>
#include <stdexcept>

namespace areba {

struct Metrics {
    double recall = 0.0;
    double specificity = 0.0;
    double gmean = 0.0;
};

/// Prequential (test-then-train) accounting with fading factors: every
/// accumulator decays by theta each step, so old predictions fade out and the
/// metrics track current performance. Recall and specificity are ratios of
/// fading correct-counts to fading class-counts; before a class has appeared
/// its accuracy is reported as 0.
class PrequentialState {
public:
    explicit PrequentialState(double theta = 0.99) : theta_(theta) {
        if (theta <= 0.0 || theta >= 1.0) {
            throw std::invalid_argument("PrequentialState: theta must lie in (0,1)");
        }
    }

    void update(int y, int y_hat) {
        if ((y != 0 && y != 1) || (y_hat != 0 && y_hat != 1)) {
            throw std::invalid_argument("PrequentialState: labels must be 0 or 1");
        }
        n_p_ *= theta_;
        n_n_ *= theta_;
        tp_ *= theta_;
        tn_ *= theta_;
        if (y == 1) {
            n_p_ += 1.0;
            if (y_hat == 1) tp_ += 1.0;
        } else {
            n_n_ += 1.0;
            if (y_hat == 0) tn_ += 1.0;
        }
    }

    Metrics metrics() const {
        Metrics m;
        m.recall = n_p_ > 0.0 ? tp_ / n_p_ : 0.0;
        m.specificity = n_n_ > 0.0 ? tn_ / n_n_ : 0.0;
        m.gmean = std::sqrt(m.recall * m.specificity);
        return m;
    }

    double theta() const { return theta_; }
    double n_p() const { return n_p_; }
    double n_n() const { return n_n_; }
    double tp() const { return tp_; }
    double tn() const { return tn_; }

private:
    double theta_;
    double n_p_ = 0.0;
    double n_n_ = 0.0;
    double tp_ = 0.0;
    double tn_ = 0.0;
};

}  // namespace areba

#endif
