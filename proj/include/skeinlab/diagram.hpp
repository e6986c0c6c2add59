#ifndef SKEINLAB_DIAGRAM_HPP
#define SKEINLAB_DIAGRAM_HPP

#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

// A braid word on `strands` strands.  Letters are nonzero integers g with
// |g| < strands; positive g is the positive crossing of strands g, g+1.
struct BraidWord {
    int strands = 1;
    std::vector<int> word;

    void validate() const;
};

// One Morse slice of a link diagram, read top to bottom.
//   Cup  — local maximum creating strands at positions p, p+1 (width +2)
//   Cap  — local minimum joining positions p, p+1 (width -2)
//   Pos  — positive crossing, as drawn, of positions p, p+1
//   Neg  — negative crossing, as drawn, of positions p, p+1
struct Slice {
    enum Kind { Cup, Cap, Pos, Neg };
    Kind kind;
    int pos;  // 1-based leftmost position the slice acts on

    bool operator==(const Slice&) const = default;
};

struct MorseDiagram {
    std::vector<Slice> slices;

    // Checks width bookkeeping: every slice must act inside the current width
    // and the final width must be zero (closed diagram).  Throws on failure.
    void validate() const;

    std::size_t crossing_count() const;
    bool operator==(const MorseDiagram&) const = default;
};

// Standard trace closure: n nested cups, the braid acting on positions
// n+1..2n, and n caps.  A letter g becomes a Pos/Neg slice at position n+|g|
// so the sign as drawn matches the sign of the letter.
MorseDiagram braid_closure(const BraidWord& b);

// Signed crossing count as drawn (#Pos - #Neg); no orientations involved.
long local_writhe(const MorseDiagram& d);

// Number of link components of a closed diagram (loops, for a crossingless
// one), by union-find over the strand segments.
int component_count(const MorseDiagram& d);

enum class Resolution { Switch, SmoothId, SmoothCupCap };

// Returns the diagram with crossing number `index` (0-based, in slice order)
// switched, deleted, or replaced by a cap-cup pair.
MorseDiagram resolve_crossing(const MorseDiagram& d, std::size_t index, Resolution r);

// Text formats.
//   braid:  "B3: 1 -2 1"       (empty word allowed: "B2:")
//   morse:  "cup@1 cup@2 x+@3 cap@2 cap@1"  (empty diagram: "")
std::string format_braid(const BraidWord& b);
BraidWord parse_braid(const std::string& text);
std::string format_morse(const MorseDiagram& d);
MorseDiagram parse_morse(const std::string& text);

// JSON mirrors: {"type":"braid","strands":3,"word":[1,-2]} and
// {"type":"morse","slices":[["cup",1],["x+",3],...]}.
std::string braid_to_json(const BraidWord& b);
std::string morse_to_json(const MorseDiagram& d);
MorseDiagram morse_from_json(const std::string& json_text);

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace skeinlab

#endif  // SKEINLAB_DIAGRAM_HPP
