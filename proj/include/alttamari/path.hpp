#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alttamari {

enum class Step : char { N = 'N', E = 'E' };

/// Integer grid point; x grows east, y grows north.
struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point &, const Point &) = default;
    /// Row-major order: by height first, then left to right.
    friend std::strong_ordering operator<=>(const Point &a, const Point &b) {
        if (auto c = a.y <=> b.y; c != 0)
            return c;
        return a.x <=> b.x;
    }
};

/// A north/east lattice path from (0,0) to (m,n).
///
/// The canonical datum is the composition (v_0, ..., v_n): v_0 east steps
/// before the first north step and v_i east steps after the i-th one.
class LatticePath {
  public:
    /// The empty path: composition (0).
    LatticePath() : runs_{0} {}

    static LatticePath from_composition(std::vector<int> runs);
    static LatticePath from_steps(std::span<const Step> steps);

    std::span<const int> composition() const noexcept { return runs_; }
    int run(int i) const { return runs_.at(static_cast<std::size_t>(i)); }

    std::vector<Step> steps() const;
    std::string word() const;
    std::string composition_string() const;

    /// Number of north steps.
    int height() const noexcept { return static_cast<int>(runs_.size()) - 1; }
    /// Number of east steps.
    int width() const noexcept { return width_; }
    std::size_t length() const noexcept {
        return static_cast<std::size_t>(width_ + height());
    }

    /// Prefix sums v_0 + ... + v_j for j = 0..n.
    std::vector<int> prefix_sums() const;

    /// True iff this path has the same endpoints as `base` and stays weakly
    /// above it.
    bool is_weakly_above(const LatticePath &base) const;

    /// Number of unit boxes between the path and the x-axis.
    long area_below() const;

    friend bool operator==(const LatticePath &, const LatticePath &) = default;
    friend auto operator<=>(const LatticePath &a, const LatticePath &b) {
        return a.runs_ <=> b.runs_;
    }

  private:
    explicit LatticePath(std::vector<int> runs);

    std::vector<int> runs_;
    int width_ = 0;
};

/// Accepts either a step word ("ENEEN") or a composition ("1,2,0").
/// The empty string is the empty path.
LatticePath parse_path(std::string_view text);

/// Parses a step word. Throws ParseError naming the first bad position.
LatticePath parse_word(std::string_view word);

/// The path reversed and with N and E swapped: from (0,0) to (n,m).
LatticePath reverse_path(const LatticePath &nu);

/// The top path N^n E^m over `nu`.
LatticePath top_path(const LatticePath &nu);

/// Bounds 0 <= delta_i <= nu_i for i = 1..n.
class IncrementVector {
  public:
    /// Throws ValidationError naming the first out-of-range index.
    IncrementVector(std::vector<int> entries, const LatticePath &nu);

    static IncrementVector minimal(const LatticePath &nu);
    static IncrementVector maximal(const LatticePath &nu);

    std::span<const int> entries() const noexcept { return entries_; }
    /// delta_i for 1 <= i <= n.
    int operator[](int i) const {
        return entries_.at(static_cast<std::size_t>(i - 1));
    }
    std::size_t size() const noexcept { return entries_.size(); }
    const LatticePath &bound() const noexcept { return bound_; }
    std::string to_string() const;

    /// Componentwise <=.
    bool dominated_by(const IncrementVector &other) const;

    friend bool operator==(const IncrementVector &a, const IncrementVector &b) {
        return a.entries_ == b.entries_ && a.bound_ == b.bound_;
    }

  private:
    std::vector<int> entries_;
    LatticePath bound_;
};

/// Parses "1,0,0" against `nu`; the empty string is the empty vector.
IncrementVector parse_increment(std::string_view text, const LatticePath &nu);

/// Every increment vector of `nu`, i.e. the box prod [0, nu_i],
/// in lexicographic order.
std::vector<IncrementVector> all_increment_vectors(const LatticePath &nu);

/// Every path with at most `max_length` steps, shortest first.
std::vector<LatticePath> all_paths_up_to(int max_length);

/// A lattice path together with the base it lies weakly above.
class NuPath {
  public:
    /// Throws ValidationError if `path` is not a `base`-path.
    NuPath(LatticePath path, LatticePath base);

    const LatticePath &path() const noexcept { return path_; }
    const LatticePath &base() const noexcept { return base_; }

    friend bool operator==(const NuPath &, const NuPath &) = default;

  private:
    LatticePath path_;
    LatticePath base_;
};

/// An occurrence of EN. `index` is the position of the E in the step word;
/// `point` is the lattice point between the two steps.
struct Valley {
    std::size_t index = 0;
    Point point;

    friend bool operator==(const Valley &, const Valley &) = default;
};

/// Half-open range of step positions.
struct StepSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const StepSpan &, const StepSpan &) = default;
};

/// All nu-paths in canonical order: compositions in decreasing
/// lexicographic order, so `nu` comes first and N^n E^m last.
std::vector<NuPath> enumerate_nu_paths(const LatticePath &nu);

/// Valleys of a path, left to right.
std::vector<Valley> valleys(const LatticePath &path);

/// Running delta-altitude at each of the length()+1 lattice points.
std::vector<int> delta_altitude_profile(const NuPath &mu, const IncrementVector &delta);

/// The delta-excursion of the `north_index`-th north step (1-based).
StepSpan delta_excursion(const NuPath &mu, const IncrementVector &delta, int north_index);

/// Swaps the east step of `valley` with the delta-excursion that follows it.
NuPath delta_rotate(const NuPath &mu, const IncrementVector &delta, const Valley &valley);

/// (sum nu - sum delta, delta_1, ..., delta_n).
LatticePath check_nu(const LatticePath &nu, const IncrementVector &delta);

} // namespace alttamari
