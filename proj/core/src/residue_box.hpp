#pragma once

// Internal helper shared by the enumeration-heavy translation units; not part
// of the installed interface.

#include <vector>

#include "linkgenus/integers.hpp"

namespace linkgenus::detail {

// Mixed-radix walker over prod(Z/e_i), last coordinate least significant, so
// index order is lexicographic on the tuples. Sizes funnel through the
// desk-scale guard in to_size.
struct ResidueBox {
    std::vector<std::size_t> radix;
    std::vector<std::size_t> place; // place value of each coordinate
    std::size_t total = 1;

    explicit ResidueBox(const std::vector<Int>& es) {
        for (const Int& e : es)
            radix.push_back(to_size(e, "residue enumeration"));
        place.assign(radix.size(), 1);
        for (std::size_t i = radix.size(); i-- > 0;) {
            if (i + 1 < radix.size()) place[i] = place[i + 1] * radix[i + 1];
            total = to_size(Int(total) * Int(radix[i] ? radix[i] : 1), "residue enumeration");
        }
        if (radix.empty()) total = 1;
    }

    std::vector<Int> decode(std::size_t idx) const {
        std::vector<Int> v(radix.size());
        for (std::size_t i = radix.size(); i-- > 0;) {
            v[i] = Int(idx % radix[i]);
            idx /= radix[i];
        }
        return v;
    }

    std::size_t encode(const std::vector<Int>& v) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < radix.size(); ++i)
            idx = idx * radix[i] + to_size(v[i], "residue enumeration");
        return idx;
    }

    std::size_t add(std::size_t a, std::size_t b) const {
        std::size_t out = 0;
        for (std::size_t i = 0; i < radix.size(); ++i) {
            std::size_t da = (a / place[i]) % radix[i], db = (b / place[i]) % radix[i];
            out += ((da + db) % radix[i]) * place[i];
        }
        return out;
    }
};

// Membership mask of the subgroup generated by `gens` inside the box.
inline std::vector<bool> subgroup_closure(const ResidueBox& box,
                                          const std::vector<std::size_t>& gens) {
    std::vector<bool> in(box.total, false);
    std::vector<std::size_t> queue{0};
    in[0] = true;
    while (!queue.empty()) {
        std::size_t x = queue.back();
        queue.pop_back();
        for (std::size_t g : gens) {
            std::size_t y = box.add(x, g);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    }
    return in;
}

} // namespace linkgenus::detail
