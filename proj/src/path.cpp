#include "alttamari/path.hpp"

#include "alttamari/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace alttamari {

namespace {

std::vector<int> parse_int_list(std::string_view text, const char *what) {
    std::vector<int> values;
    if (text.empty())
        return values;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view item =
            text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
            ++pos;
        }
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError(std::string("invalid ") + what + " entry '" + std::string(item) +
                                 "' at position " + std::to_string(pos),
                             pos);
        }
        if (value < 0) {
            throw ParseError(std::string("negative ") + what + " entry at position " +
                                 std::to_string(pos),
                             pos);
        }
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return values;
}

} // namespace

LatticePath::LatticePath(std::vector<int> runs) : runs_(std::move(runs)) {
    width_ = std::accumulate(runs_.begin(), runs_.end(), 0);
}

LatticePath LatticePath::from_composition(std::vector<int> runs) {
    if (runs.empty())
        throw ValidationError("a composition needs at least one entry");
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i] < 0)
            throw ValidationError("negative composition entry at index " + std::to_string(i));
    }
    return LatticePath(std::move(runs));
}

LatticePath LatticePath::from_steps(std::span<const Step> steps) {
    std::vector<int> runs{0};
    for (Step s : steps) {
        if (s == Step::N)
            runs.push_back(0);
        else
            ++runs.back();
    }
    return LatticePath(std::move(runs));
}

std::vector<Step> LatticePath::steps() const {
    std::vector<Step> out;
    out.reserve(length());
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        if (i > 0)
            out.push_back(Step::N);
        out.insert(out.end(), static_cast<std::size_t>(runs_[i]), Step::E);
    }
    return out;
}

std::string LatticePath::word() const {
    std::string out;
    for (Step s : steps())
        out.push_back(static_cast<char>(s));
    return out;
}

std::string LatticePath::composition_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < runs_.size(); ++i)
        os << (i ? "," : "") << runs_[i];
    return os.str();
}

std::vector<int> LatticePath::prefix_sums() const {
    std::vector<int> out(runs_.size());
    std::partial_sum(runs_.begin(), runs_.end(), out.begin());
    return out;
}

bool LatticePath::is_weakly_above(const LatticePath &base) const {
    if (runs_.size() != base.runs_.size() || width_ != base.width_)
        return false;
    int mine = 0, theirs = 0;
    for (std::size_t j = 0; j < runs_.size(); ++j) {
        mine += runs_[j];
        theirs += base.runs_[j];
        if (mine > theirs)
            return false;
    }
    return true;
}

long LatticePath::area_below() const {
    long area = 0;
    for (std::size_t i = 0; i < runs_.size(); ++i)
        area += static_cast<long>(i) * runs_[i];
    return area;
}

LatticePath parse_word(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == 'N' || c == 'n')
            steps.push_back(Step::N);
        else if (c == 'E' || c == 'e')
            steps.push_back(Step::E);
        else
            throw ParseError("invalid step '" + std::string(1, c) + "' at position " +
                                 std::to_string(i) + " (expected N or E)",
                             i);
    }
    return LatticePath::from_steps(steps);
}

LatticePath parse_path(std::string_view text) {
    bool numeric = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == ',' || c == ' ';
    });
    if (numeric)
        return LatticePath::from_composition(parse_int_list(text, "composition"));
    return parse_word(text);
}

LatticePath reverse_path(const LatticePath &nu) {
    std::vector<Step> steps = nu.steps();
    std::reverse(steps.begin(), steps.end());
    for (Step &s : steps)
        s = s == Step::N ? Step::E : Step::N;
    return LatticePath::from_steps(steps);
}

LatticePath top_path(const LatticePath &nu) {
    std::vector<int> runs(static_cast<std::size_t>(nu.height()) + 1, 0);
    runs.back() = nu.width();
    return LatticePath::from_composition(std::move(runs));
}

IncrementVector::IncrementVector(std::vector<int> entries, const LatticePath &nu)
    : entries_(std::move(entries)), bound_(nu) {
    if (entries_.size() != static_cast<std::size_t>(nu.height())) {
        throw ValidationError("increment vector has " + std::to_string(entries_.size()) +
                              " entries but the base path has " +
                              std::to_string(nu.height()) + " north steps");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        int bound = nu.run(static_cast<int>(i) + 1);
        if (entries_[i] < 0 || entries_[i] > bound) {
            throw ValidationError("increment entry delta_" + std::to_string(i + 1) + " = " +
                                  std::to_string(entries_[i]) + " is outside [0, " +
                                  std::to_string(bound) + "]");
        }
    }
}

IncrementVector IncrementVector::minimal(const LatticePath &nu) {
    return IncrementVector(std::vector<int>(static_cast<std::size_t>(nu.height()), 0), nu);
}

IncrementVector IncrementVector::maximal(const LatticePath &nu) {
    auto c = nu.composition();
    return IncrementVector(std::vector<int>(c.begin() + 1, c.end()), nu);
}

std::string IncrementVector::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? "," : "") << entries_[i];
    return os.str();
}

bool IncrementVector::dominated_by(const IncrementVector &other) const {
    if (entries_.size() != other.entries_.size())
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

IncrementVector parse_increment(std::string_view text, const LatticePath &nu) {
    return IncrementVector(parse_int_list(text, "increment"), nu);
}

std::vector<IncrementVector> all_increment_vectors(const LatticePath &nu) {
    std::vector<IncrementVector> out;
    const auto n = static_cast<std::size_t>(nu.height());
    std::vector<int> current(n, 0);
    while (true) {
        out.emplace_back(current, nu);
        std::size_t i = n;
        for (; i > 0; --i) {
            if (current[i - 1] < nu.run(static_cast<int>(i))) {
                ++current[i - 1];
                break;
            }
            current[i - 1] = 0;
        }
        if (i == 0)
            return out;
    }
}

std::vector<LatticePath> all_paths_up_to(int max_length) {
    std::vector<LatticePath> out;
    for (int len = 0; len <= max_length; ++len) {
        for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
            std::vector<Step> steps;
            for (int k = len - 1; k >= 0; --k)
                steps.push_back((bits >> k) & 1UL ? Step::N : Step::E);
            out.push_back(LatticePath::from_steps(steps));
        }
    }
    return out;
}

NuPath::NuPath(LatticePath path, LatticePath base)
    : path_(std::move(path)), base_(std::move(base)) {
    if (!path_.is_weakly_above(base_)) {
        throw ValidationError("path " + path_.word() + " is not weakly above " + base_.word() +
                              " with the same endpoints");
    }
}

std::vector<NuPath> enumerate_nu_paths(const LatticePath &nu) {
    const auto bounds = nu.prefix_sums();
    const int n = nu.height();
    const int m = nu.width();
    std::vector<NuPath> out;
    std::vector<int> runs(static_cast<std::size_t>(n) + 1, 0);

    // Depth-first over positions, largest entry first, so the output is in
    // decreasing lexicographic order.
    auto fill = [&](auto &&self, int i, int used) -> void {
        if (i == n) {
            runs[static_cast<std::size_t>(n)] = m - used;
            out.emplace_back(LatticePath::from_composition(runs), nu);
            return;
        }
        for (int v = bounds[static_cast<std::size_t>(i)] - used; v >= 0; --v) {
            runs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, used + v);
        }
    };
    fill(fill, 0, 0);
    return out;
}

std::vector<Valley> valleys(const LatticePath &path) {
    std::vector<Valley> out;
    const auto steps = path.steps();
    int x = 0, y = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (steps[i] == Step::E) {
            ++x;
            if (steps[i + 1] == Step::N)
                out.push_back({i, {x, y}});
        } else {
            ++y;
        }
    }
    return out;
}

std::vector<int> delta_altitude_profile(const NuPath &mu, const IncrementVector &delta) {
    if (!(delta.bound() == mu.base()))
        throw ContractError("increment vector was built for a different base path");
    std::vector<int> profile{0};
    int north = 0;
    for (Step s : mu.path().steps()) {
        int step = s == Step::N ? delta[++north] : -1;
        profile.push_back(profile.back() + step);
    }
    return profile;
}

StepSpan delta_excursion(const NuPath &mu, const IncrementVector &delta, int north_index) {
    const auto steps = mu.path().steps();
    if (north_index < 1 || north_index > mu.path().height())
        throw ContractError("north step index " + std::to_string(north_index) + " out of range");
    if (!(delta.bound() == mu.base()))
        throw ContractError("increment vector was built for a different base path");

    std::size_t start = 0;
    int seen = 0;
    for (; start < steps.size(); ++start) {
        if (steps[start] == Step::N && ++seen == north_index)
            break;
    }
    int elevation = 0;
    int north = north_index - 1;
    for (std::size_t i = start; i < steps.size(); ++i) {
        elevation += steps[i] == Step::N ? delta[++north] : -1;
        if (elevation == 0)
            return {start, i + 1};
    }
    throw ContractError("delta-excursion of north step " + std::to_string(north_index) +
                        " does not return to zero elevation");
}

NuPath delta_rotate(const NuPath &mu, const IncrementVector &delta, const Valley &valley) {
    auto steps = mu.path().steps();
    if (valley.index + 1 >= steps.size() || steps[valley.index] != Step::E ||
        steps[valley.index + 1] != Step::N) {
        throw ContractError("position " + std::to_string(valley.index) +
                            " is not a valley of " + mu.path().word());
    }
    int north_index = static_cast<int>(
        std::count(steps.begin(), steps.begin() + static_cast<long>(valley.index) + 1, Step::N) + 1);
    StepSpan span = delta_excursion(mu, delta, north_index);
    // [E][excursion] -> [excursion][E]
    std::rotate(steps.begin() + static_cast<long>(valley.index),
                steps.begin() + static_cast<long>(span.begin),
                steps.begin() + static_cast<long>(span.end));
    return NuPath(LatticePath::from_steps(steps), mu.base());
}

LatticePath check_nu(const LatticePath &nu, const IncrementVector &delta) {
    if (!(delta.bound() == nu))
        throw ContractError("increment vector was built for a different base path");
    auto d = delta.entries();
    std::vector<int> runs{nu.width() - std::accumulate(d.begin(), d.end(), 0)};
    runs.insert(runs.end(), d.begin(), d.end());
    return LatticePath::from_composition(std::move(runs));
}

} // namespace alttamari
