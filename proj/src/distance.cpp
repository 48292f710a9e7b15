#include "agcodes/distance.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace agcodes {

const char* to_string(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::exact: return "exact";
        case DistanceKind::upper_bound: return "upper_bound";
        case DistanceKind::designed_only: return "designed_only";
    }
    return "?";
}

std::uint64_t message_space(std::uint32_t field_size, std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / field_size) return std::numeric_limits<std::uint64_t>::max();
        total *= field_size;
    }
    return total - 1;
}

DistanceResult exact_distance(const Matrix& generator, std::uint64_t budget) {
    const Field& f = *generator.field();
    const std::size_t k = generator.rows(), n = generator.cols();
    if (k == 0) return {};
    if (message_space(f.size(), k) > budget) throw BudgetExceeded("message space exceeds distance budget");

    const Rep field_size = f.size();
    DistanceResult best{DistanceKind::exact, std::nullopt, {}, 0};
    std::vector<Rep> word(n);
    std::vector<Rep> digit(k);

    // Messages with leading nonzero coordinate `lead` equal to 1; the remaining
    // coordinates run through a modular Gray code so each step touches one row.
    // Leads go from the last row upward, i.e. lexicographic order of the
    // normalized messages, so (0, ..., 0, 1) is the first codeword visited.
    for (std::size_t lead = k; lead-- > 0;) {
        const auto lead_row = generator.row(lead);
        std::copy(lead_row.begin(), lead_row.end(), word.begin());
        std::size_t weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Rep e) { return e != 0; }));
        std::fill(digit.begin(), digit.end(), 0);
        const std::size_t free = k - 1 - lead;
        const std::uint64_t steps = message_space(field_size, free) + 1;

        for (std::uint64_t step = 0;; ++step) {
            ++best.work;
            if (!best.value || weight < *best.value) {
                best.value = weight;
                best.certificate = word;
            }
            if (step + 1 == steps) break;
            std::uint64_t t = step + 1;
            std::size_t pos = 0;
            while (t % field_size == 0) {
                t /= field_size;
                ++pos;
            }
            const Rep old_digit = digit[pos];
            const Rep new_digit = (old_digit + 1) % field_size;
            digit[pos] = new_digit;
            const Rep delta = f.sub(new_digit, old_digit);
            const auto row = generator.row(lead + 1 + pos);
            for (std::size_t c = 0; c < n; ++c) {
                if (row[c] == 0) continue;
                const Rep before = word[c];
                const Rep after = f.add(before, f.mul(delta, row[c]));
                word[c] = after;
                weight += (after != 0) - (before != 0);
            }
        }
    }
    return best;
}

DistanceResult exact_distance(const EvalCode& code, std::uint64_t budget) { return exact_distance(code.generator, budget); }

DistanceResult sampled_upper_bound(const Matrix& generator, std::uint64_t samples, std::uint64_t seed) {
    const Field& f = *generator.field();
    const std::size_t k = generator.rows(), n = generator.cols();
    if (k == 0 || samples == 0) return {};

    DistanceResult best{DistanceKind::upper_bound, std::nullopt, {}, 0};
    auto consider = [&](std::vector<Rep>& word) {
        ++best.work;
        const auto weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Rep e) { return e != 0; }));
        if (!best.value || weight < *best.value) {
            best.value = weight;
            best.certificate = word;
        }
    };

    std::vector<Rep> word(n);
    for (std::size_t i = 0; i < k && best.work < samples; ++i) {
        const auto row = generator.row(i);
        word.assign(row.begin(), row.end());
        consider(word);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Rep> pick(0, f.size() - 1);
    std::vector<Rep> message(k);
    while (best.work < samples) {
        bool nonzero = false;
        for (auto& m : message) {
            m = pick(rng);
            nonzero |= m != 0;
        }
        if (!nonzero) continue;
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (message[i] == 0) continue;
            const auto row = generator.row(i);
            for (std::size_t c = 0; c < n; ++c)
                if (row[c] != 0) word[c] = f.add(word[c], f.mul(message[i], row[c]));
        }
        consider(word);
    }
    return best;
}

DesignedBounds designed_bounds(const FamilySpec& spec, std::int64_t r) {
    const auto n = static_cast<std::int64_t>(spec.n);
    return {std::max<std::int64_t>(n - r, 1), std::max<std::int64_t>(r - 2 * spec.g + 2, 1)};
}

}  // namespace agcodes
