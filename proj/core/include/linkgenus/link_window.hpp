#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkgenus/int_matrix.hpp"

namespace linkgenus {

// Finite ordered family of disjoint knots in an integral homology 3-sphere,
// presented by its linking matrix. The ambient manifold never appears
// explicitly: a homology sphere contributes exactly this data.
class LinkWindow {
public:
    LinkWindow() = default;
    // Throws ValidationError on duplicate labels or a non-symmetric /
    // nonzero-diagonal / wrongly sized matrix.
    LinkWindow(std::vector<std::string> knots, IntMatrix lk);

    const std::vector<std::string>& knots() const { return knots_; }
    std::size_t size() const { return knots_.size(); }
    bool has(const std::string& knot) const;
    // Index of knot in the window order; throws ValidationError if absent.
    std::size_t index_of(const std::string& knot) const;

    // Linking number of two distinct knots (zero for a knot with itself).
    const Int& lk(const std::string& a, const std::string& b) const;
    const Int& lk(std::size_t a, std::size_t b) const;
    const IntMatrix& lk_matrix() const { return lk_; }

    bool operator==(const LinkWindow& o) const = default;

private:
    std::vector<std::string> knots_;
    IntMatrix lk_;
};

struct WindowViolation {
    std::string message; // includes offending labels / positions
};

struct WindowValidation {
    std::optional<LinkWindow> window; // set iff violations empty
    std::vector<WindowViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks symmetry, zero diagonal, duplicate labels and shape, reporting every
// violation rather than stopping at the first.
WindowValidation validate_window(const std::vector<std::string>& knots, const IntMatrix& lk);

// New window with one extra knot whose linking numbers to the old knots are
// `linking` (window order). The label is fresh and deterministic: "aux1",
// "aux2", ... first suffix not already present.
LinkWindow add_synthetic_knot(const LinkWindow& w, const std::vector<Int>& linking,
                              std::string* label_out = nullptr);

} // namespace linkgenus
