#include "ptelab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptelab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::single_row(int r) {
    if (r < 0) throw std::invalid_argument("single_row: negative");
    return r == 0 ? Partition() : Partition(std::vector<int>{r});
}

Partition Partition::single_column(int c) {
    if (c < 0) throw std::invalid_argument("single_column: negative");
    return Partition(std::vector<int>(static_cast<std::size_t>(c), 1));
}

Partition Partition::staircase(int n) {
    if (n < 1) throw std::invalid_argument("staircase: n must be >= 1");
    std::vector<int> p(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
    return Partition(std::move(p));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("Partition::part: 1-based index");
    return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int col = 1; col <= parts_[0]; ++col) {
        int rows = 0;
        for (int p : parts_)
            if (p >= col) ++rows;
        conj[static_cast<std::size_t>(col - 1)] = rows;
    }
    return Partition(std::move(conj));
}

bool Partition::in_box(int rows, int cols) const {
    if (length() > rows) return false;
    return parts_.empty() || parts_[0] <= cols;
}

Partition Partition::complement_in_box(int rows, int cols) const {
    if (!in_box(rows, cols))
        throw std::domain_error("complement_in_box: partition does not fit the box");
    std::vector<int> comp(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i)
        comp[static_cast<std::size_t>(i - 1)] = cols - part(rows + 1 - i);
    return Partition(std::move(comp));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    // Tolerate surrounding whitespace and an optional bracket pair.
    auto strip = [](std::string& t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    };
    strip(s);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("Partition::parse: unbalanced brackets");
        s = s.substr(1, s.size() - 2);
    }
    strip(s);
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            strip(tok);
            if (tok.empty()) throw std::invalid_argument("Partition::parse: empty entry");
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Partition::parse: bad entry '" + tok + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

std::vector<Partition> Partition::of_size(int t, int max_len) {
    if (t < 0) throw std::invalid_argument("of_size: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-first recursion emits lex-descending part vectors; we sort after.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, t, t == 0 ? 1 : t);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return PartitionGradedLess{}(a, b);
    });
    return out;
}

std::vector<Partition> Partition::up_to_size(int max_size, int max_len) {
    std::vector<Partition> out;
    for (int t = 0; t <= max_size; ++t) {
        auto layer = of_size(t, max_len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Partition> Partition::in_box_all(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) >= rows) return;
        for (int p = max_part; p >= 1; --p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return PartitionGradedLess{}(a, b);
    });
    return out;
}

bool PartitionGradedLess::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end());
}

}  // namespace ptelab
