#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace critind {

// Set of vertex ids, stored as a sorted, duplicate-free vector.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<uint32_t> ids) : ids_(ids) { normalize(); }
    explicit VertexSet(std::vector<uint32_t> ids) : ids_(std::move(ids)) { normalize(); }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<uint32_t>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool contains(uint32_t v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }

    bool isSubsetOf(const VertexSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(),
                             ids_.begin(), ids_.end());
    }

    bool intersects(const VertexSet& other) const {
        auto a = ids_.begin();
        auto b = other.ids_.begin();
        while (a != ids_.end() && b != other.ids_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    void insert(uint32_t v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }

    void erase(uint32_t v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<uint32_t> ids_;
};

VertexSet setUnion(const VertexSet& a, const VertexSet& b);
VertexSet setIntersection(const VertexSet& a, const VertexSet& b);
VertexSet setDifference(const VertexSet& a, const VertexSet& b);

} // namespace critind
