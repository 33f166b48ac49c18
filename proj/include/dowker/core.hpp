#ifndef DOWKER_CORE_HPP
#define DOWKER_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dowker {

using Bits = boost::dynamic_bitset<>;

enum class errc {
    unknown_id,
    void_relation,
    not_tight,
    precondition_violated,
    universe_mismatch,
    universe_overlap,
    not_stable,
    cap_exceeded,
    too_large,
    invalid_morphism,
    not_surjective,
    not_maximal,
    not_informative,
    not_controllable,
    not_hamiltonian,
    not_complete,
    stochastic_unsupported,
    unknown_element,
    missing_field,
    parse_error,
    out_of_range,
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

// ordered id universe with O(1) id -> index lookup
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<std::string> ids) : ids_(std::move(ids)) {
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (!index_.emplace(ids_[i], i).second)
                fail(errc::parse_error, "duplicate id: " + ids_[i]);
        }
    }

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }

    std::size_t index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) fail(errc::unknown_id, "unknown id: " + id);
        return it->second;
    }
    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    Bits set_of(const std::vector<std::string>& members) const {
        Bits b(size());
        for (const auto& m : members) b.set(index(m));
        return b;
    }
    std::vector<std::string> ids_of(const Bits& b) const {
        std::vector<std::string> out;
        for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(ids_[i]);
        return out;
    }

    bool operator==(const Universe& o) const { return ids_ == o.ids_; }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::vector<Bits::block_type> blocks(b.num_blocks());
        boost::to_block_range(b, blocks.begin());
        std::size_t h = b.size();
        for (auto w : blocks) h ^= std::hash<Bits::block_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

inline Bits full_bits(std::size_t n) {
    Bits b(n);
    b.set();
    return b;
}

inline std::vector<std::size_t> bit_indices(const Bits& b) {
    std::vector<std::size_t> out;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
    return out;
}

// visit all subsets of the support of mask, smallest first within equal popcount not guaranteed
template <typename F>
void for_each_subset(const Bits& mask, F&& f) {
    std::vector<std::size_t> idx = bit_indices(mask);
    if (idx.size() > 25) fail(errc::too_large, "subset enumeration too large");
    std::uint64_t total = 1ULL << idx.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        Bits sub(mask.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (code & (1ULL << j)) sub.set(idx[j]);
        f(sub);
    }
}

}  // namespace dowker

#endif
