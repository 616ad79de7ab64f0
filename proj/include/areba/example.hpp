#ifndef AREBA_EXAMPLE_HPP
#define AREBA_EXAMPLE_HPP

#include <vector>

namespace areba {

/// One streamed observation: features in [0,1]^d and a binary label
/// (1 = positive, which is the minority class by convention).
struct LabeledExample {
    std::vector<double> x;
    int y = 0;

    bool operator==(const LabeledExample&) const = default;
};

}  // namespace areba

#endif
