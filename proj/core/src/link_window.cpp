#include "linkgenus/link_window.hpp"

#include <set>
#include <sstream>

namespace linkgenus {

namespace {

std::vector<WindowViolation> window_violations(const std::vector<std::string>& knots,
                                               const IntMatrix& lk) {
    std::vector<WindowViolation> out;
    auto flag = [&](std::string msg) { out.push_back({std::move(msg)}); };

    std::set<std::string> seen;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (knots[i].empty()) flag("knot " + std::to_string(i) + " has an empty label");
        if (!seen.insert(knots[i]).second)
            flag("duplicate knot label \"" + knots[i] + "\" at position " + std::to_string(i));
    }

    if (lk.rows() != knots.size() || lk.cols() != knots.size()) {
        std::ostringstream os;
        os << "linking matrix is " << lk.rows() << "x" << lk.cols() << " but the window has "
           << knots.size() << " knots";
        flag(os.str());
        return out; // shape is wrong; entry checks would index out of range
    }

    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (lk.at(i, i) != 0)
            flag("nonzero self-linking " + to_string(lk.at(i, i)) + " for \"" + knots[i] + "\"");
        for (std::size_t j = i + 1; j < knots.size(); ++j)
            if (lk.at(i, j) != lk.at(j, i))
                flag("lk(\"" + knots[i] + "\",\"" + knots[j] + "\") = " + to_string(lk.at(i, j)) +
                     " but lk(\"" + knots[j] + "\",\"" + knots[i] + "\") = " + to_string(lk.at(j, i)));
    }
    return out;
}

} // namespace

WindowValidation validate_window(const std::vector<std::string>& knots, const IntMatrix& lk) {
    WindowValidation out;
    out.violations = window_violations(knots, lk);
    if (out.violations.empty()) out.window = LinkWindow(knots, lk);
    return out;
}

LinkWindow::LinkWindow(std::vector<std::string> knots, IntMatrix lk)
    : knots_(std::move(knots)), lk_(std::move(lk)) {
    std::vector<WindowViolation> viols = window_violations(knots_, lk_);
    if (!viols.empty()) {
        std::string msg = "invalid window:";
        for (const auto& v : viols) msg += "\n  " + v.message;
        throw ValidationError(msg);
    }
}

bool LinkWindow::has(const std::string& knot) const {
    for (const auto& k : knots_)
        if (k == knot) return true;
    return false;
}

std::size_t LinkWindow::index_of(const std::string& knot) const {
    for (std::size_t i = 0; i < knots_.size(); ++i)
        if (knots_[i] == knot) return i;
    throw ValidationError("unknown knot label \"" + knot + "\"");
}

const Int& LinkWindow::lk(const std::string& a, const std::string& b) const {
    return lk_.at(index_of(a), index_of(b));
}

const Int& LinkWindow::lk(std::size_t a, std::size_t b) const { return lk_.at(a, b); }

LinkWindow add_synthetic_knot(const LinkWindow& w, const std::vector<Int>& linking,
                              std::string* label_out) {
    if (linking.size() != w.size())
        throw ValidationError("synthetic knot: linking vector has " +
                              std::to_string(linking.size()) + " entries for a window of " +
                              std::to_string(w.size()));
    std::string label;
    for (unsigned k = 1;; ++k) {
        label = "aux" + std::to_string(k);
        if (!w.has(label)) break;
    }
    std::vector<std::string> knots = w.knots();
    knots.push_back(label);
    IntMatrix lk(knots.size(), knots.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) lk.at(i, j) = w.lk(i, j);
    for (std::size_t i = 0; i < w.size(); ++i) {
        lk.at(i, w.size()) = linking[i];
        lk.at(w.size(), i) = linking[i];
    }
    if (label_out) *label_out = label;
    return LinkWindow(std::move(knots), std::move(lk));
}

} // namespace linkgenus
