#include "rikitake/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace rikitake {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw std::invalid_argument("ring needs at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("ring variable name must be non-empty");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate ring variable '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

} // namespace rikitake
