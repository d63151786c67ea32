#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "detrelay/rational.hpp"

namespace detrelay {

enum class Duplex { Full, Half };

// Channel gains of one user pair, all relative to the relay.
struct PairGains {
    int up_a = 0;    // A_i -> relay
    int up_b = 0;    // B_i -> relay
    int down_a = 0;  // relay -> A_i
    int down_b = 0;  // relay -> B_i

    bool operator==(const PairGains&) const = default;
};

// An M-pair bidirectional relay network instance.
struct NetworkSpec {
    int pairs = 0;
    std::vector<PairGains> gains;  // size == pairs
    Duplex mode = Duplex::Full;
    Rat listen_fraction{1, 2};  // half-duplex only: relay listens this fraction of the time

    int q_up() const;    // max uplink gain, 0 when all links are dead
    int q_down() const;  // max downlink gain

    bool operator==(const NetworkSpec&) const = default;
};

// One direction of a session. Flow order everywhere is
// A1B1, B1A1, A2B2, B2A2, ...
struct DirectedFlow {
    int pair = 0;  // 0-based
    bool b_to_a = false;

    bool operator==(const DirectedFlow&) const = default;
    auto operator<=>(const DirectedFlow&) const = default;
};

inline int flow_index(const DirectedFlow& f) { return 2 * f.pair + (f.b_to_a ? 1 : 0); }
inline DirectedFlow flow_at(int index) { return DirectedFlow{index / 2, index % 2 != 0}; }
std::string flow_name(const DirectedFlow& f);  // "A1B1", "B2A2", ...

// Gain from the flow's source up to the relay / from the relay down to the
// flow's destination.
int uplink_gain(const NetworkSpec& spec, const DirectedFlow& f);
int downlink_gain(const NetworkSpec& spec, const DirectedFlow& f);

// 2M exact non-negative rationals in flow order.
using RateTuple = std::vector<Rat>;

RateTuple to_rational(const std::vector<long long>& rates);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const NetworkSpec& spec);

// Throws std::invalid_argument if the spec does not validate.
void require_valid(const NetworkSpec& spec);

// The network seen over q_uplink listen uses and q_downlink transmit uses of
// the channel: every uplink gain times q_uplink, every downlink gain times
// q_downlink. The result is full-duplex.
NetworkSpec expand(const NetworkSpec& spec, int q_uplink, int q_downlink);

// Line-oriented text format, '#' starts a comment:
//   pairs <M>
//   gains <i> up <n_AiR> <n_BiR> down <n_RAi> <n_RBi>   (one line per pair)
//   mode full | mode half <p>/<d>
NetworkSpec parse_network(std::istream& in);
NetworkSpec parse_network_file(const std::string& path);
std::string format_network(const NetworkSpec& spec);

}  // namespace detrelay
