#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rikitake {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// An ordered set of distinct variable names. The order is fixed for the
// ring's lifetime and determines the monomial order used for printing.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    static RingPtr make(std::vector<std::string> names) {
        return std::make_shared<const Ring>(std::move(names));
    }

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    bool has(std::string_view name) const { return index_of(name).has_value(); }

    friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace rikitake
