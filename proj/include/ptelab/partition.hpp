#pragma once

// Integer partitions with the conventions used across the library:
// weakly decreasing positive parts, trailing zeros stripped on construction,
// graded-lex order for canonical printing and container keys.

#include <string>
#include <vector>

#include "ptelab/rational.hpp"

namespace ptelab {

class Partition {
public:
    Partition() = default;

    // Accepts weakly decreasing entries with possible trailing zeros.
    // Throws std::invalid_argument on negative parts or an increase.
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int r);              // (r), or () if r == 0
    static Partition single_column(int c);           // (1^c)
    static Partition staircase(int n);               // (n-1, n-2, ..., 1)

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;                                // |lambda|
    int part(int i) const;                           // 1-based, 0 past the end
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool in_box(int rows, int cols) const;           // fits rows x cols
    // Box complement: (cols - p_rows, ..., cols - p_1) inside rows x cols.
    Partition complement_in_box(int rows, int cols) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    std::string to_string() const;                   // "[3,1]", "[]" for empty
    static Partition parse(const std::string& text);

    // All partitions of exactly t (optionally with at most max_len parts).
    static std::vector<Partition> of_size(int t, int max_len = -1);
    // All partitions of size 0..max_size with at most max_len parts.
    static std::vector<Partition> up_to_size(int max_size, int max_len = -1);
    // All partitions inside a rows x cols box, graded-lex order.
    static std::vector<Partition> in_box_all(int rows, int cols);

private:
    std::vector<int> parts_;
};

// Graded lexicographic: first by |lambda|, then lex on parts (longer/larger
// first within a grade is NOT applied; plain lex on the part vectors).
struct PartitionGradedLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

}  // namespace ptelab
