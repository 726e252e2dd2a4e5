#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hyperopic {

using Vertex = int;

// Fixed-universe vertex set backed by 64-bit words. The universe size is the
// graph order; all set operations are O(n/64).
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet singleton(int universe, Vertex v) {
        VertexSet s(universe);
        s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(Vertex v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL;
    }

    void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63); }
    void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63)); }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Smallest member; -1 when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<Vertex>(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool operator<(const VertexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return words_ < o.words_;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(n_);
        for (auto w : words_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (Vertex v : to_vector()) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

private:
    void trim() {
        int rem = n_ & 63;
        if (rem && !words_.empty()) words_.back() &= (1ULL << rem) - 1;
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace hyperopic
