#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mullreg {

/// An integer partition: a weakly decreasing sequence of positive integers.
/// Trailing zeros are never stored, so equality of part vectors is equality
/// of partitions. The empty partition is the default-constructed value.
class Partition {
public:
    Partition() = default;

    /// Validates weak decrease and positivity; throws std::invalid_argument
    /// on anything else (zeros must be dropped by the caller beforehand).
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// 1-indexed part accessor extending the sequence with zeros, so that
    /// part_at(i) is defined for every i >= 1.
    int part_at(int i) const;

    /// |lambda| -- the sum of the parts.
    int size() const noexcept { return size_; }

    /// Number of non-zero parts (the length of the first column).
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }

    bool empty() const noexcept { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A cell (row, col) of a Young diagram, 1-indexed, rows growing downward.
struct Node {
    int row = 0;
    int col = 0;

    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
};

/// Conjugate partition (reflection of the diagram in the main diagonal).
Partition conjugate(const Partition& p);

/// Drops the first row: (lambda_2, lambda_3, ...).
Partition remove_first_row(const Partition& p);

/// Drops the first column: capped subtraction of 1 from every part.
Partition remove_first_column(const Partition& p);

/// Prepends a column of the given length, i.e. adds 1 to the first
/// `column_length` parts (missing parts count as 0 and become 1).
/// Requires column_length >= num_parts(p) so the result is a partition.
Partition add_column(const Partition& p, int column_length);

/// True iff no e consecutive parts are equal and positive.
bool is_e_regular(const Partition& p, int e);

/// True iff every difference lambda_i - lambda_{i+1} (including the last
/// part minus 0) is < e. Equivalent to is_e_regular(conjugate(p), e).
bool is_e_restricted(const Partition& p, int e);

/// All partitions of n in descending lexicographic order of part vectors.
/// Deterministic; the same n always yields the same sequence.
std::vector<Partition> enumerate_partitions(int n);

/// Parses exponent notation, e.g. "10,6^2,4,2" -> (10,6,6,4,2).
/// Whitespace around tokens is ignored. The empty partition is written
/// "()"; a bare "0" is rejected. Throws std::invalid_argument with the
/// offending token on malformed input.
Partition parse_partition(std::string_view text);

/// Renders exponent notation; inverse of parse_partition.
std::string format_partition(const Partition& p);

namespace detail {
/// Throws std::invalid_argument unless e >= 2.
void require_e(int e);
}

} // namespace mullreg
