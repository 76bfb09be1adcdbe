#include "utfree/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace utfree {

namespace {

using ImageKey = std::tuple<Rational, Rational, Rational>;

ImageKey key_of(const UTMat2& m) { return {m.e11, m.e12, m.e22}; }

std::vector<std::vector<unsigned long>> all_vectors(std::size_t t, unsigned long lo,
                                                    unsigned long bound) {
    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> point(t, lo);
    while (true) {
        out.push_back(point);
        std::size_t pos = t;
        while (pos > 0 && point[pos - 1] == bound) point[--pos] = lo;
        if (pos == 0) break;
        ++point[pos - 1];
    }
    return out;
}

CollisionReport report_from_groups(std::map<ImageKey, std::vector<std::vector<unsigned long>>>& groups,
                                   unsigned long bound) {
    CollisionReport report;
    report.bound = bound;
    for (auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                report.pairs.push_back({members[i], members[j]});
    }
    std::sort(report.pairs.begin(), report.pairs.end());
    report.found = !report.pairs.empty();
    return report;
}

}  // namespace

CollisionReport search_collisions_serial(const Instance& inst, unsigned long bound) {
    std::map<ImageKey, std::vector<std::vector<unsigned long>>> groups;
    for (auto& point : all_vectors(inst.t(), 0, bound))
        groups[key_of(inst.image(point))].push_back(std::move(point));
    return report_from_groups(groups, bound);
}

CollisionReport search_collisions_parallel(const Instance& inst, unsigned long bound) {
    const auto points = all_vectors(inst.t(), 0, bound);
    std::vector<ImageKey> keys(points.size());

    // Each power of mu(x) is needed (bound+1)^{t-1} times; precompute them.
    std::vector<UTMat2> mx_pow(bound + 1);
    mx_pow[0] = UTMat2::identity();
    for (unsigned long i = 1; i <= bound; ++i) mx_pow[i] = mx_pow[i - 1] * inst.mx;

#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(points.size()); ++idx) {
        UTMat2 acc = inst.nz[0];
        for (std::size_t i = 0; i < inst.t(); ++i)
            acc = acc * mx_pow[points[idx][i]] * inst.nz[i + 1];
        keys[idx] = key_of(acc);
    }

    std::map<ImageKey, std::vector<std::vector<unsigned long>>> groups;
    for (std::size_t idx = 0; idx < points.size(); ++idx)
        groups[keys[idx]].push_back(points[idx]);
    return report_from_groups(groups, bound);
}

std::optional<std::pair<std::vector<unsigned long>, std::vector<unsigned long>>>
tuple_collision_bruteforce(const DigitSequence& seq, unsigned long bound) {
    if (seq.s == 0 || bound < 1) return std::nullopt;
    std::map<DigitWord, std::vector<unsigned long>> seen;
    for (auto& point : all_vectors(seq.s, 1, bound)) {
        auto [it, fresh] = seen.try_emplace(instantiate_word(seq, point), point);
        if (!fresh) {
            auto pair = std::minmax(it->second, point);
            return std::make_pair(pair.first, pair.second);
        }
    }
    return std::nullopt;
}

}  // namespace utfree
