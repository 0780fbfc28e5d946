#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sect::transform {

// Pending textual edits over an immutable source. Edits never partially
// overlap; a replacement swallows every edit it fully contains. A zero-width
// edit sitting exactly on a range boundary is outside that range.
class EditBuffer {
public:
    explicit EditBuffer(std::string_view source) : src_(source) {}

    void replace(std::uint32_t begin, std::uint32_t end, std::string text);
    void insert(std::uint32_t pos, std::string text) { replace(pos, pos, std::move(text)); }

    // Original text of [begin, end) with the contained edits applied.
    std::string render(std::uint32_t begin, std::uint32_t end) const;
    std::string result() const { return render(0, static_cast<std::uint32_t>(src_.size())); }

    bool empty() const { return edits_.empty(); }

private:
    struct Edit {
        std::uint32_t begin;
        std::uint32_t end;
        std::string text;
    };

    static bool within(const Edit& e, std::uint32_t begin, std::uint32_t end);

    std::string_view src_;
    std::vector<Edit> edits_;  // sorted by (begin, end), stable for equal keys
};

}  // namespace sect::transform
