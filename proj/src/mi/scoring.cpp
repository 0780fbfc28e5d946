#include "sect/mi/scoring.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sect/error.hpp"

namespace sect::mi {

namespace {

// Sums in descending value order. LOSS and MIN_K share this order, which
// makes MIN_K(k=1) == LOSS bit for bit and both invariant under reordering
// the tokens.
double descending_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    double s = 0;
    for (double v : values) s += v;
    return s;
}

}  // namespace

void validate(const LikelihoodProfile& p) {
    if (p.nll.empty()) throw InvalidInput("profile '" + p.sample_id + "' is empty");
    if (p.tokens.size() != p.nll.size()) throw InvalidInput("profile '" + p.sample_id + "': tokens and nll differ in length");
    for (double v : p.nll) {
        if (!std::isfinite(v) || v < 0) throw InvalidInput("profile '" + p.sample_id + "': nll must be finite and >= 0");
    }
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::Loss: return "LOSS";
        case Method::MinK: return "MIN_K";
        case Method::Zlib: return "ZLIB";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (auto m : {Method::Loss, Method::MinK, Method::Zlib}) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

MembershipScore score_loss(const LikelihoodProfile& p) {
    validate(p);
    return {p.sample_id, Method::Loss, descending_sum(p.nll) / static_cast<double>(p.nll.size())};
}

MembershipScore score_min_k(const LikelihoodProfile& p, double k) {
    validate(p);
    if (!(k > 0 && k <= 1)) throw InvalidInput("k must lie in (0, 1]");
    auto n = p.nll.size();
    // The slack absorbs binary rounding of decimal k (0.7 * 10 must give 7).
    auto m = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(k * static_cast<double>(n) + 1e-9)));
    m = std::min(m, n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.nll[a] > p.nll[b]; });
    std::vector<double> chosen;
    chosen.reserve(m);
    for (std::size_t i = 0; i < m; ++i) chosen.push_back(p.nll[order[i]]);
    return {p.sample_id, Method::MinK, descending_sum(std::move(chosen)) / static_cast<double>(m)};
}

std::size_t zlib_compressed_size(std::string_view bytes) {
    uLongf len = compressBound(static_cast<uLong>(bytes.size()));
    std::vector<Bytef> out(len);
    if (compress2(out.data(), &len, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uLong>(bytes.size()),
                  kZlibLevel) != Z_OK) {
        throw Error("zlib compression failed");
    }
    return len;
}

MembershipScore score_zlib(const LikelihoodProfile& p, std::string_view raw_text) {
    if (raw_text.empty()) throw InvalidInput("ZLIB needs the sample's raw text");
    auto loss = score_loss(p).value;
    return {p.sample_id, Method::Zlib, loss / static_cast<double>(zlib_compressed_size(raw_text))};
}

}  // namespace sect::mi
