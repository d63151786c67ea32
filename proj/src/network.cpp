#include "detrelay/network.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace detrelay {

int NetworkSpec::q_up() const {
    int q = 0;
    for (const PairGains& g : gains) q = std::max({q, g.up_a, g.up_b});
    return q;
}

int NetworkSpec::q_down() const {
    int q = 0;
    for (const PairGains& g : gains) q = std::max({q, g.down_a, g.down_b});
    return q;
}

std::string flow_name(const DirectedFlow& f) {
    std::string i = std::to_string(f.pair + 1);
    return f.b_to_a ? "B" + i + "A" + i : "A" + i + "B" + i;
}

int uplink_gain(const NetworkSpec& spec, const DirectedFlow& f) {
    const PairGains& g = spec.gains.at(static_cast<size_t>(f.pair));
    return f.b_to_a ? g.up_b : g.up_a;
}

int downlink_gain(const NetworkSpec& spec, const DirectedFlow& f) {
    const PairGains& g = spec.gains.at(static_cast<size_t>(f.pair));
    return f.b_to_a ? g.down_a : g.down_b;
}

RateTuple to_rational(const std::vector<long long>& rates) {
    RateTuple r;
    r.reserve(rates.size());
    for (long long v : rates) r.emplace_back(v);
    return r;
}

ValidationReport validate(const NetworkSpec& spec) {
    ValidationReport rep;
    if (spec.pairs < 1) rep.violations.push_back("pair count must be >= 1 (pairs = " + std::to_string(spec.pairs) + ")");
    if (static_cast<int>(spec.gains.size()) != spec.pairs)
        rep.violations.push_back("gain table has " + std::to_string(spec.gains.size()) + " entries for " +
                                 std::to_string(spec.pairs) + " pairs");
    for (size_t i = 0; i < spec.gains.size(); ++i) {
        const PairGains& g = spec.gains[i];
        auto flag = [&](int v, const char* which) {
            if (v < 0)
                rep.violations.push_back("pair " + std::to_string(i + 1) + ": negative gain on " + which + " (" +
                                         std::to_string(v) + ")");
        };
        flag(g.up_a, "uplink A");
        flag(g.up_b, "uplink B");
        flag(g.down_a, "downlink A");
        flag(g.down_b, "downlink B");
    }
    if (spec.mode == Duplex::Half) {
        if (!(spec.listen_fraction > Rat(0) && spec.listen_fraction < Rat(1)))
            rep.violations.push_back("listen fraction must be strictly between 0 and 1 (t = " +
                                     format_rat(spec.listen_fraction) + ")");
    }
    return rep;
}

void require_valid(const NetworkSpec& spec) {
    ValidationReport rep = validate(spec);
    if (!rep.ok()) throw std::invalid_argument("invalid network: " + rep.violations.front());
}

NetworkSpec expand(const NetworkSpec& spec, int q_uplink, int q_downlink) {
    require_valid(spec);
    if (q_uplink < 1 || q_downlink < 1) throw std::invalid_argument("expansion factors must be >= 1");
    NetworkSpec out = spec;
    out.mode = Duplex::Full;
    for (PairGains& g : out.gains) {
        g.up_a *= q_uplink;
        g.up_b *= q_uplink;
        g.down_a *= q_downlink;
        g.down_b *= q_downlink;
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("network file line " + std::to_string(line) + ": " + msg);
}

}  // namespace

NetworkSpec parse_network(std::istream& in) {
    NetworkSpec spec;
    std::vector<bool> seen;
    bool got_pairs = false, got_mode = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;  // blank / comment-only line
        if (kw == "pairs") {
            if (got_pairs) parse_fail(lineno, "duplicate 'pairs' line");
            if (!(ls >> spec.pairs)) parse_fail(lineno, "expected 'pairs <M>'");
            if (spec.pairs < 0) parse_fail(lineno, "pair count cannot be negative");
            spec.gains.assign(static_cast<size_t>(spec.pairs), PairGains{});
            seen.assign(static_cast<size_t>(spec.pairs), false);
            got_pairs = true;
        } else if (kw == "gains") {
            if (!got_pairs) parse_fail(lineno, "'gains' before 'pairs'");
            int idx = 0;
            std::string up_kw, down_kw;
            PairGains g;
            if (!(ls >> idx >> up_kw >> g.up_a >> g.up_b >> down_kw >> g.down_a >> g.down_b) || up_kw != "up" ||
                down_kw != "down")
                parse_fail(lineno, "expected 'gains <i> up <a> <b> down <c> <d>'");
            if (idx < 1 || idx > spec.pairs) parse_fail(lineno, "pair index out of range");
            if (seen[static_cast<size_t>(idx - 1)]) parse_fail(lineno, "duplicate gains for pair " + std::to_string(idx));
            seen[static_cast<size_t>(idx - 1)] = true;
            spec.gains[static_cast<size_t>(idx - 1)] = g;
        } else if (kw == "mode") {
            if (got_mode) parse_fail(lineno, "duplicate 'mode' line");
            std::string m;
            if (!(ls >> m)) parse_fail(lineno, "expected 'mode full' or 'mode half <p>/<d>'");
            if (m == "full") {
                spec.mode = Duplex::Full;
            } else if (m == "half") {
                std::string frac;
                if (!(ls >> frac)) parse_fail(lineno, "half-duplex mode needs a listen fraction <p>/<d>");
                auto t = parse_rat(frac);
                if (!t) parse_fail(lineno, "malformed listen fraction '" + frac + "'");
                spec.mode = Duplex::Half;
                spec.listen_fraction = *t;
            } else {
                parse_fail(lineno, "unknown mode '" + m + "'");
            }
            got_mode = true;
        } else {
            parse_fail(lineno, "unknown keyword '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) parse_fail(lineno, "trailing tokens after '" + kw + "' line");
    }
    if (!got_pairs) throw std::runtime_error("network file: missing 'pairs' line");
    if (!got_mode) throw std::runtime_error("network file: missing 'mode' line");
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw std::runtime_error("network file: missing gains for pair " + std::to_string(i + 1));
    return spec;
}

NetworkSpec parse_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open network file '" + path + "'");
    return parse_network(in);
}

std::string format_network(const NetworkSpec& spec) {
    std::ostringstream os;
    os << "pairs " << spec.pairs << "\n";
    for (int i = 0; i < spec.pairs; ++i) {
        const PairGains& g = spec.gains[static_cast<size_t>(i)];
        os << "gains " << (i + 1) << " up " << g.up_a << " " << g.up_b << " down " << g.down_a << " " << g.down_b
           << "\n";
    }
    if (spec.mode == Duplex::Full)
        os << "mode full\n";
    else
        os << "mode half " << format_rat(spec.listen_fraction) << "\n";
    return os.str();
}

}  // namespace detrelay
