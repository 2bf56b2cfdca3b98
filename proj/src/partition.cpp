#include "mullreg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mullreg {

namespace detail {

void require_e(int e)
{
    if (e < 2)
        throw std::invalid_argument("e must be at least 2, got " + std::to_string(e));
}

} // namespace detail

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive, got "
                                        + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part_at(int i) const
{
    if (i < 1)
        throw std::out_of_range("part index must be >= 1, got " + std::to_string(i));
    if (i > num_parts())
        return 0;
    return parts_[static_cast<std::size_t>(i) - 1];
}

Partition conjugate(const Partition& p)
{
    if (p.empty())
        return {};
    // Column j of p has height #{i : lambda_i >= j}; parts are sorted, so
    // each column height is found by walking the parts once.
    std::vector<int> cols(static_cast<std::size_t>(p.parts().front()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

Partition remove_first_row(const Partition& p)
{
    if (p.empty())
        return {};
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Partition remove_first_column(const Partition& p)
{
    std::vector<int> out;
    out.reserve(p.parts().size());
    for (int part : p.parts())
        if (part > 1)
            out.push_back(part - 1);
    return Partition(std::move(out));
}

Partition add_column(const Partition& p, int column_length)
{
    if (column_length < p.num_parts())
        throw std::invalid_argument(
            "add_column: column length " + std::to_string(column_length)
            + " is shorter than the " + std::to_string(p.num_parts())
            + " existing rows; the result would not be a partition");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(column_length));
    for (int i = 1; i <= column_length; ++i)
        out.push_back(p.part_at(i) + 1);
    return Partition(std::move(out));
}

bool is_e_regular(const Partition& p, int e)
{
    detail::require_e(e);
    int run = 1;
    for (int i = 1; i < p.num_parts(); ++i) {
        if (p.parts()[static_cast<std::size_t>(i)] == p.parts()[static_cast<std::size_t>(i) - 1])
            ++run;
        else
            run = 1;
        if (run >= e)
            return false;
    }
    return true;
}

bool is_e_restricted(const Partition& p, int e)
{
    detail::require_e(e);
    for (int i = 1; i <= p.num_parts(); ++i)
        if (p.part_at(i) - p.part_at(i + 1) >= e)
            return false;
    return true;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

namespace {

// Tokens of the partition grammar: positive integers, ',', '^', and the
// parentheses of the empty-partition spelling "()".
struct PartitionLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done()
    {
        skip_ws();
        return pos == text.size();
    }

    char peek()
    {
        skip_ws();
        return text[pos];
    }

    char take()
    {
        char c = peek();
        ++pos;
        return c;
    }

    long long take_int()
    {
        skip_ws();
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("expected an integer at position "
                                        + std::to_string(pos) + " of partition text");
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000)
                throw std::invalid_argument("partition part or exponent exceeds 1000000");
            ++pos;
        }
        return value;
    }
};

} // namespace

Partition parse_partition(std::string_view text)
{
    PartitionLexer lex{text};
    if (lex.done())
        throw std::invalid_argument("empty partition text; write the empty partition as ()");

    if (lex.peek() == '(') {
        lex.take();
        if (lex.done() || lex.take() != ')' || !lex.done())
            throw std::invalid_argument("malformed empty-partition token; expected ()");
        return {};
    }

    std::vector<int> parts;
    for (;;) {
        long long part = lex.take_int();
        if (part == 0)
            throw std::invalid_argument(
                "zero is not a valid part; write the empty partition as ()");
        long long exponent = 1;
        if (!lex.done() && lex.peek() == '^') {
            lex.take();
            exponent = lex.take_int();
            if (exponent == 0)
                throw std::invalid_argument("part exponent must be positive");
        }
        if (static_cast<long long>(parts.size()) + exponent > 1'000'000)
            throw std::invalid_argument("partition has more than 1000000 parts");
        parts.insert(parts.end(), static_cast<std::size_t>(exponent), static_cast<int>(part));
        if (lex.done())
            break;
        if (lex.take() != ',')
            throw std::invalid_argument("expected ',' between parts in partition text");
    }
    return Partition(std::move(parts)); // rejects non-decreasing sequences
}

std::string format_partition(const Partition& p)
{
    if (p.empty())
        return "()";
    std::string out;
    std::size_t i = 0;
    const auto& parts = p.parts();
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace mullreg
