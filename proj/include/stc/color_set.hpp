#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace stc {

// Strong colors are 1..c; 0 is reserved for "weak" in labelings.
using Color = int;

// A set of strong colors kept as a sorted, duplicate-free vector.
class ColorSet {
public:
    ColorSet() = default;
    ColorSet(std::initializer_list<Color> colors) : colors_(colors) { normalize(); }
    explicit ColorSet(std::vector<Color> colors) : colors_(std::move(colors)) { normalize(); }

    // {1, ..., c}
    static ColorSet full(int c) {
        ColorSet s;
        s.colors_.reserve(static_cast<std::size_t>(std::max(c, 0)));
        for (Color i = 1; i <= c; ++i) {
            s.colors_.push_back(i);
        }
        return s;
    }

    bool contains(Color x) const { return std::binary_search(colors_.begin(), colors_.end(), x); }
    bool empty() const { return colors_.empty(); }
    int size() const { return static_cast<int>(colors_.size()); }
    Color min() const { return colors_.front(); }
    Color max() const { return colors_.back(); }

    void insert(Color x) {
        const auto it = std::lower_bound(colors_.begin(), colors_.end(), x);
        if (it == colors_.end() || *it != x) {
            colors_.insert(it, x);
        }
    }

    ColorSet intersect(const ColorSet& other) const {
        ColorSet out;
        std::set_intersection(colors_.begin(), colors_.end(), other.colors_.begin(), other.colors_.end(),
                              std::back_inserter(out.colors_));
        return out;
    }

    ColorSet unite(const ColorSet& other) const {
        ColorSet out;
        std::set_union(colors_.begin(), colors_.end(), other.colors_.begin(), other.colors_.end(),
                       std::back_inserter(out.colors_));
        return out;
    }

    bool is_subset_of(const ColorSet& other) const {
        return std::includes(other.colors_.begin(), other.colors_.end(), colors_.begin(), colors_.end());
    }

    const std::vector<Color>& values() const { return colors_; }
    auto begin() const { return colors_.begin(); }
    auto end() const { return colors_.end(); }

    friend bool operator==(const ColorSet&, const ColorSet&) = default;
    friend auto operator<=>(const ColorSet&, const ColorSet&) = default;

private:
    void normalize() {
        std::sort(colors_.begin(), colors_.end());
        colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
    }

    std::vector<Color> colors_;
};

} // namespace stc
