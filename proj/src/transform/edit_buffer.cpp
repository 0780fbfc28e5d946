#include "transform/edit_buffer.hpp"

#include <algorithm>
#include <stdexcept>

namespace sect::transform {

bool EditBuffer::within(const Edit& e, std::uint32_t begin, std::uint32_t end) {
    if (e.begin == e.end) return begin < e.begin && e.begin < end;
    return begin <= e.begin && e.end <= end;
}

void EditBuffer::replace(std::uint32_t begin, std::uint32_t end, std::string text) {
    if (begin > end || end > src_.size()) throw std::logic_error("edit range out of bounds");
    Edit edit{begin, end, std::move(text)};
    for (const auto& e : edits_) {
        if (within(e, begin, end)) continue;
        bool disjoint = e.end <= begin || end <= e.begin;
        if (e.begin == e.end || begin == end) {
            // A point is inside a range only strictly between its ends.
            if (within(edit, e.begin, e.end)) throw std::logic_error("edit inside replaced text");
            continue;
        }
        if (!disjoint) throw std::logic_error("overlapping edits");
    }
    std::erase_if(edits_, [&](const Edit& e) { return within(e, begin, end); });
    auto pos = std::upper_bound(edits_.begin(), edits_.end(), edit, [](const Edit& a, const Edit& b) {
        return a.begin != b.begin ? a.begin < b.begin : a.end < b.end;
    });
    edits_.insert(pos, std::move(edit));
}

std::string EditBuffer::render(std::uint32_t begin, std::uint32_t end) const {
    std::string out;
    std::uint32_t cursor = begin;
    for (const auto& e : edits_) {
        if (!within(e, begin, end)) {
            bool touches = e.begin < end && begin < e.end;
            if (touches && e.begin != e.end) throw std::logic_error("render cuts through an edit");
            continue;
        }
        out.append(src_.substr(cursor, e.begin - cursor));
        out.append(e.text);
        cursor = e.end;
    }
    out.append(src_.substr(cursor, end - cursor));
    return out;
}

}  // namespace sect::transform
