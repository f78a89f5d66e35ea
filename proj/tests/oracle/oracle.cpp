#include "oracle.hpp"

#include "alttamari/errors.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

Word word_of(const Composition &runs) {
    Word w(static_cast<std::size_t>(runs.at(0)), 'E');
    for (std::size_t i = 1; i < runs.size(); ++i) {
        w += 'N';
        w.append(static_cast<std::size_t>(runs[i]), 'E');
    }
    return w;
}

Composition runs_of(const Word &word) {
    Composition runs{0};
    for (char c : word) {
        if (c == 'N')
            runs.push_back(0);
        else
            ++runs.back();
    }
    return runs;
}

namespace {

bool weakly_above(const Word &word, const Composition &nu) {
    const Composition mu = runs_of(word);
    if (mu.size() != nu.size())
        return false;
    int a = 0, b = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        a += mu[i];
        b += nu[i];
        if (a > b)
            return false;
    }
    return a == b;
}

// End (exclusive) of the delta-excursion starting at the N at `start`.
std::optional<std::size_t> excursion_end(const Word &w, const std::vector<int> &delta,
                                         std::size_t start) {
    if (start >= w.size() || w[start] != 'N')
        return std::nullopt;
    std::size_t norths = static_cast<std::size_t>(std::count(w.begin(), w.begin() + static_cast<long>(start), 'N'));
    int alt = delta.at(norths);
    ++norths;
    std::size_t i = start + 1;
    while (alt != 0) {
        if (i == w.size())
            return std::nullopt;
        if (w[i] == 'N')
            alt += delta.at(norths++);
        else
            --alt;
        ++i;
    }
    return i;
}

} // namespace

std::vector<Word> brute_force_paths(const Composition &nu) {
    int m = 0;
    for (int r : nu)
        m += r;
    const int n = static_cast<int>(nu.size()) - 1;
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(m), 'E');
    w.append(static_cast<std::size_t>(n), 'N');
    std::sort(w.begin(), w.end());
    do {
        if (weakly_above(w, nu))
            out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end(),
              [](const Word &a, const Word &b) { return runs_of(a) > runs_of(b); });
    return out;
}

std::size_t ballot_count(const Composition &nu) {
    const std::size_t n = nu.size() - 1;
    std::vector<int> bound(nu.size());
    int s = 0;
    for (std::size_t y = 0; y < nu.size(); ++y)
        bound[y] = s += nu[y];
    const auto m = static_cast<std::size_t>(s);
    std::vector<std::vector<std::size_t>> ways(n + 1, std::vector<std::size_t>(m + 1, 0));
    ways[0][0] = 1;
    for (std::size_t y = 0; y <= n; ++y) {
        for (std::size_t x = 0; x <= m; ++x) {
            if (static_cast<int>(x) > bound[y])
                continue;
            if (x > 0)
                ways[y][x] += ways[y][x - 1];
            if (y > 0)
                ways[y][x] += ways[y - 1][x];
        }
    }
    return ways[n][m];
}

std::optional<Word> naive_delta_rotate(const Word &word, const std::vector<int> &delta,
                                       std::size_t e_index) {
    if (e_index + 1 >= word.size() || word[e_index] != 'E' || word[e_index + 1] != 'N')
        return std::nullopt;
    auto end = excursion_end(word, delta, e_index + 1);
    if (!end)
        return std::nullopt;
    return word.substr(0, e_index) + word.substr(e_index + 1, *end - e_index - 1) + 'E' +
           word.substr(*end);
}

std::optional<Word> naive_nu_rotate(const Word &word, const Composition &nu,
                                    std::size_t e_index) {
    if (e_index + 1 >= word.size() || word[e_index] != 'E' || word[e_index + 1] != 'N')
        return std::nullopt;
    // Horizontal distance from each lattice point of the path to nu.
    std::vector<int> prefix;
    int s = 0;
    for (int r : nu)
        prefix.push_back(s += r);
    std::vector<int> dist{prefix[0]};
    int x = 0, y = 0;
    for (char c : word) {
        if (c == 'N')
            ++y;
        else
            ++x;
        dist.push_back(prefix[static_cast<std::size_t>(y)] - x);
    }
    const std::size_t p = e_index + 1;
    for (std::size_t q = p + 1; q < dist.size(); ++q) {
        if (dist[q] == dist[p]) {
            return word.substr(0, e_index) + word.substr(p, q - p) + 'E' + word.substr(q);
        }
    }
    return std::nullopt;
}

Poset rotation_poset(const Composition &nu, const std::vector<int> &delta) {
    Poset poset;
    poset.elements = brute_force_paths(nu);
    for (std::size_t a = 0; a < poset.elements.size(); ++a) {
        const Word &w = poset.elements[a];
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            auto up = naive_delta_rotate(w, delta, i);
            if (!up)
                continue;
            auto it = std::find(poset.elements.begin(), poset.elements.end(), *up);
            if (it == poset.elements.end())
                throw alttamari::ContractError("rotation left the set of paths: " + *up);
            poset.covers.emplace_back(a, static_cast<std::size_t>(it - poset.elements.begin()));
        }
    }
    return poset;
}

RelationMatrix order_from_covers(std::size_t count,
                                 const std::vector<std::pair<std::size_t, std::size_t>> &covers) {
    RelationMatrix m(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i)
        m[i][i] = 1;
    for (auto [a, b] : covers) {
        if (a == b)
            throw alttamari::ContractError("cover from an element to itself");
        m[a][b] = 1;
    }
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < count; ++i)
            if (m[i][k])
                for (std::size_t j = 0; j < count; ++j)
                    if (m[k][j])
                        m[i][j] = 1;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (m[i][j] && m[j][i])
                throw alttamari::ContractError("cover relation has a cycle");
    return m;
}

LinearCheck is_linear(const RelationMatrix &m, std::size_t bottom, std::size_t top) {
    std::vector<std::size_t> members;
    for (std::size_t c = 0; c < m.size(); ++c)
        if (m[bottom][c] && m[c][top])
            members.push_back(c);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!m[members[i]][members[j]] && !m[members[j]][members[i]])
                return {false, 0};
    return {true, static_cast<int>(members.size()) - 1};
}

std::vector<Linear> linear_intervals(const RelationMatrix &m) {
    std::vector<Linear> out;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
            if (a != b && m[a][b])
                if (auto check = is_linear(m, a, b); check.linear)
                    out.push_back({a, b, check.length});
    return out;
}

std::vector<std::size_t> census(const RelationMatrix &m) {
    std::vector<std::size_t> counts{m.size()};
    for (const Linear &l : linear_intervals(m)) {
        if (counts.size() <= static_cast<std::size_t>(l.length))
            counts.resize(static_cast<std::size_t>(l.length) + 1, 0);
        ++counts[static_cast<std::size_t>(l.length)];
    }
    return counts;
}

namespace {

std::optional<std::size_t> extreme_common(const RelationMatrix &m, std::size_t a, std::size_t b,
                                          bool lower) {
    auto rel = [&](std::size_t x, std::size_t y) { return lower ? m[x][y] != 0 : m[y][x] != 0; };
    std::vector<std::size_t> common;
    for (std::size_t c = 0; c < m.size(); ++c)
        if (rel(c, a) && rel(c, b))
            common.push_back(c);
    for (std::size_t c : common) {
        if (std::all_of(common.begin(), common.end(), [&](std::size_t d) { return rel(d, c); }))
            return c;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::size_t> meet(const RelationMatrix &m, std::size_t a, std::size_t b) {
    return extreme_common(m, a, b, true);
}

std::optional<std::size_t> join(const RelationMatrix &m, std::size_t a, std::size_t b) {
    return extreme_common(m, a, b, false);
}

std::pair<std::size_t, std::size_t> dyck_marked_counts(const Composition &nu, int length) {
    std::size_t left = 0, right = 0;
    const auto l = static_cast<std::size_t>(length);
    for (const Word &w : brute_force_paths(nu)) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == 'N' && i >= l &&
                std::all_of(w.begin() + static_cast<long>(i - l), w.begin() + static_cast<long>(i),
                            [](char c) { return c == 'E'; }))
                ++left;
            if (w[i] == 'E' && i + l < w.size() &&
                std::all_of(w.begin() + static_cast<long>(i + 1),
                            w.begin() + static_cast<long>(i + 1 + l),
                            [](char c) { return c == 'N'; }))
                ++right;
        }
    }
    return {left, right};
}

Shape path_shape(const Word &bottom, const Word &top, const std::vector<int> &delta, int length) {
    const auto k = static_cast<std::size_t>(length);
    bool left = false, right = false;
    for (std::size_t i = 0; i + k < bottom.size() && !left; ++i) {
        if (bottom.compare(i, k, std::string(k, 'E')) != 0)
            continue;
        auto end = excursion_end(bottom, delta, i + k);
        if (!end)
            continue;
        Word q = bottom.substr(0, i) + bottom.substr(i + k, *end - i - k) + std::string(k, 'E') +
                 bottom.substr(*end);
        left = q == top;
    }
    for (std::size_t i = 0; i < bottom.size() && !right; ++i) {
        if (bottom[i] != 'E')
            continue;
        std::size_t pos = i + 1;
        bool ok = true;
        for (std::size_t t = 0; t < k && ok; ++t) {
            auto end = excursion_end(bottom, delta, pos);
            ok = end.has_value();
            if (ok)
                pos = *end;
        }
        if (!ok)
            continue;
        Word q = bottom.substr(0, i) + bottom.substr(i + 1, pos - i - 1) + 'E' + bottom.substr(pos);
        right = q == top;
    }
    if (left && right)
        return Shape::both;
    if (left)
        return Shape::left;
    if (right)
        return Shape::right;
    return Shape::none;
}

} // namespace oracle
