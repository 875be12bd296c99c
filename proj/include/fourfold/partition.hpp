#pragma once

#include <string>
#include <vector>

#include "fourfold/error.hpp"

namespace fourfold {

// Weakly decreasing nonnegative integer sequence; trailing zeros are
// suppressed, so the empty partition is canonical for the unit class.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                raise("InvalidPartition", "parts must be weakly decreasing and nonnegative");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool fits(int rows, int cols) const {
        return length() <= rows && (parts_.empty() || parts_[0] <= cols);
    }

    bool contains(const Partition& mu) const {
        for (int i = 0; i < mu.length(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }

    Partition conjugate() const {
        if (parts_.empty()) return Partition();
        std::vector<int> conj(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) conj[j]++;
        return Partition(std::move(conj));
    }

    // complement within the rows x cols box: mu_i = cols - lambda_{rows+1-i}
    Partition complement(int rows, int cols) const {
        if (!fits(rows, cols))
            raise("BoxViolation", "partition does not fit the box");
        std::vector<int> out(rows);
        for (int i = 0; i < rows; ++i) out[i] = cols - part(rows - 1 - i);
        return Partition(std::move(out));
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
};

// size-major order, then lexicographically larger parts first; puts e.g.
// (4) before (3,1) before (2,2) which matches the usual printed order
struct PartitionSizeLexGreater {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() > b.parts();
    }
};

}  // namespace fourfold
