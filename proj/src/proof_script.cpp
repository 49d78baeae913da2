#include "chroma/proof_script.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chroma/errors.hpp"
#include "chroma/graph_io.hpp"

namespace chroma {

std::string_view to_string(StepKind k) {
    switch (k) {
        case StepKind::Assign: return "Assign";
        case StepKind::Propagate: return "Propagate";
        case StepKind::Eliminate: return "Eliminate";
        case StepKind::RunExtend: return "RunExtend";
        case StepKind::Branch: return "Branch";
        case StepKind::CiteRefutedPattern: return "CiteRefutedPattern";
        case StepKind::Contradiction: return "Contradiction";
    }
    return "?";
}

ProofStep ProofStep::assign(std::vector<int> targets, std::vector<ColorSet> colors, std::string note) {
    ProofStep s;
    s.kind = StepKind::Assign;
    s.targets = std::move(targets);
    s.colors = std::move(colors);
    s.note = std::move(note);
    return s;
}

ProofStep ProofStep::arrow(std::vector<int> sources, std::vector<int> targets, std::string note) {
    ProofStep s;
    s.kind = StepKind::Propagate;
    s.sources = std::move(sources);
    s.targets = std::move(targets);
    s.note = std::move(note);
    return s;
}

ProofStep ProofStep::eliminate(std::vector<int> sources, std::vector<int> targets, std::string note) {
    ProofStep s = arrow(std::move(sources), std::move(targets), std::move(note));
    s.kind = StepKind::Eliminate;
    return s;
}

ProofStep ProofStep::extend(int i, std::vector<int> targets, std::string note) {
    ProofStep s = arrow({i, i + 1}, std::move(targets), std::move(note));
    s.kind = StepKind::RunExtend;
    return s;
}

ProofStep ProofStep::branch(int vertex, std::vector<BranchArm> arms, std::string note) {
    ProofStep s;
    s.kind = StepKind::Branch;
    s.targets = {vertex};
    s.arms = std::move(arms);
    s.note = std::move(note);
    return s;
}

ProofStep ProofStep::cite(char case_id, std::vector<int> vertices, std::string note) {
    ProofStep s;
    s.kind = StepKind::CiteRefutedPattern;
    s.cited_case = case_id;
    s.targets = std::move(vertices);
    s.note = std::move(note);
    return s;
}

ProofStep ProofStep::conflict(int a, int b, std::string note) {
    ProofStep s;
    s.kind = StepKind::Contradiction;
    s.targets = {a, b};
    s.note = std::move(note);
    return s;
}

ProofScript shipped_script(char case_id) {
    using S = ProofStep;
    ProofScript p;
    p.case_id = case_id;
    switch (case_id) {
        case 'a':
            p.title = "123";
            p.steps = {S::assign({7, 8, 9}, {{1}, {2}, {3}}, "three consecutive distinct colors"),
                       S::arrow({7, 8}, {4, 11}), S::arrow({8, 9}, {5, 12}), S::arrow({4, 5}, {1}),
                       S::arrow({11, 12}, {15}), S::conflict(1, 15)};
            p.expected_contradiction = Edge{1, 15};
            break;
        case 'b':
            p.title = "121";
            p.steps = {S::assign({7, 8, 9}, {{1}, {2}, {1}}, "a singleton between equal colors"),
                       S::arrow({7, 8}, {11}),
                       S::branch(10,
                                 {BranchArm{2, std::nullopt, {S::cite('a', {9, 10, 11}, "9,10,11 distinct")}},
                                  BranchArm{3, std::nullopt, {S::cite('a', {8, 9, 10}, "8,9,10 distinct")}}},
                                 "vertex 10 is adjacent to 7")};
            p.expected_reductions = {'a'};
            break;
        case 'c':
            p.title = "331122233";
            p.requires_no_singleton = true;
            p.steps = {S::assign({5, 6, 7, 8, 9, 10, 11, 12, 13}, {{3}, {3}, {1}, {1}, {2}, {2}, {2}, {3}, {3}},
                                 "a pair next to a triple"),
                       S::arrow({6, 7}, {3}),   S::arrow({11, 12}, {15}), S::arrow({3, 15}, {18}),
                       S::arrow({7, 18}, {4}),  S::arrow({4, 5}, {1}),    S::conflict(1, 15)};
            p.expected_contradiction = Edge{1, 15};
            break;
        case 'd': {
            p.title = "bi-chromatic vertex 1";
            std::vector<ProofStep> chain = {
                S::arrow({7, 15}, {11}), S::arrow({5, 11}, {8}),  S::arrow({8, 15}, {12}), S::arrow({5, 12}, {9}),
                S::arrow({9, 16}, {13}), S::arrow({7, 13}, {10}), S::arrow({9, 10}, {6}),  S::arrow({10, 11}, {14}),
                S::arrow({6, 7}, {3}),   S::arrow({13, 14}, {17}), S::conflict(3, 17)};
            p.steps = {S::assign({1}, {{1, 2}}, "vertex 1 holds colors 1 and 2"),
                       S::arrow({1}, {4, 5, 15, 16}),
                       S::eliminate({4, 5, 15, 16}, {7, 8, 9, 11, 12, 13}),
                       S::branch(7,
                                 {BranchArm{1, std::nullopt, std::move(chain)},
                                  BranchArm{2, std::pair{1, 2}, {}}},
                                 "without loss of generality vertex 7 is color 1")};
            p.expected_contradiction = Edge{3, 17};
            break;
        }
        default: throw DomainError(std::string("no shipped proof script for case '") + case_id + "'");
    }
    return p;
}

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

class Replayer {
public:
    explicit Replayer(ReplayReport& report) : report_(report) {}

    void replay_list(const std::vector<ProofStep>& steps, DeductionState state, int depth, std::set<int> assumed,
                     const std::string& title, bool assumptions_allowed) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const ProofStep& step = steps[i];
            const std::size_t no = ++counter_;
            if (step.kind != StepKind::Assign) assumptions_allowed = false;
            TraceEntry entry{no, depth, step.kind, step.sources, step.targets, {}};
            const bool closes = apply(step, no, state, depth, assumed, title, assumptions_allowed, entry);
            if (step.kind != StepKind::Branch) report_.trace.push_back(entry);
            if (closes) {
                if (i + 1 != steps.size()) fail(no + 1, "steps follow a closed branch");
                return;
            }
        }
        fail(counter_, "script ends without reaching a contradiction");
    }

private:
    [[noreturn]] static void fail(std::size_t step, const std::string& what) { throw ScriptValidationError(step, what); }

    static void require_labels(std::size_t no, const std::vector<int>& labels) {
        for (int l : labels) {
            if (l < 1 || l > kRimSize) fail(no, "vertex " + std::to_string(l) + " is not a rim label 1..18");
        }
    }

    // Returns true when the step closes the current branch.
    bool apply(const ProofStep& step, std::size_t no, DeductionState& s, int depth, std::set<int>& assumed,
               const std::string& title, bool assumptions_allowed, TraceEntry& entry) {
        require_labels(no, step.sources);
        require_labels(no, step.targets);
        switch (step.kind) {
            case StepKind::Assign: {
                if (!assumptions_allowed) fail(no, "assumptions may only open the script");
                if (step.colors.size() != step.targets.size()) fail(no, "one color set per target required");
                for (std::size_t i = 0; i < step.targets.size(); ++i) {
                    const int t = step.targets[i];
                    const ColorSet cs = step.colors[i];
                    if (!s.held(t).empty()) fail(no, "vertex " + std::to_string(t) + " is already colored");
                    if ((cs.mask() & ~kRimPalette.mask()) != 0 || cs.empty() || cs.size() > 2) {
                        fail(no, "colors must be one or two of {1,2,3}");
                    }
                    const auto cols = cs.colors();
                    if (cols.size() == 1) s.assign(t, cols[0]);
                    else s.assign_bichromatic(t, cols[0], cols[1]);
                    assumed.insert(t);
                    std::string digits;
                    for (int c : cols) digits += static_cast<char>('0' + c);
                    entry.result += (i ? " " : "") + std::to_string(t) + "=" + digits;
                }
                return false;
            }
            case StepKind::Propagate: {
                if (step.sources.empty() || step.targets.empty()) fail(no, "arrow needs sources and targets");
                ColorSet given;
                for (int src : step.sources) {
                    if (s.held(src).empty()) fail(no, "source " + std::to_string(src) + " has no color yet");
                    given = given | s.held(src);
                }
                if (given.size() != 2) {
                    fail(no, "sources carry " + std::to_string(given.size()) + " colors; exactly two are needed");
                }
                const int forced = ColorSet(kRimPalette.mask() & ~given.mask()).min();
                for (int t : step.targets) {
                    for (int src : step.sources) {
                        if (!rim_adjacent(t, src)) {
                            fail(no, "vertex " + std::to_string(t) + " is not adjacent to source " + std::to_string(src));
                        }
                    }
                    if (s.is_bichromatic(t) || !s.held(t).empty()) {
                        fail(no, "vertex " + std::to_string(t) + " is already colored");
                    }
                    if (!s.candidates(t).contains(forced)) {
                        fail(no, "vertex " + std::to_string(t) + " cannot take the forced color " + std::to_string(forced));
                    }
                }
                for (int t : step.targets) {
                    s.assign(t, forced);
                    entry.result += (entry.result.empty() ? "" : " ") + std::to_string(t) + "=" + std::to_string(forced);
                }
                return false;
            }
            case StepKind::Eliminate: {
                if (step.sources.empty() || step.targets.empty()) fail(no, "elimination needs sources and targets");
                for (int src : step.sources) {
                    if (s.held(src).empty()) fail(no, "source " + std::to_string(src) + " has no color yet");
                }
                for (int t : step.targets) {
                    if (!s.held(t).empty()) fail(no, "vertex " + std::to_string(t) + " is already colored");
                    ColorSet removed;
                    for (int src : step.sources) {
                        if (rim_adjacent(t, src)) removed = removed | s.held(src);
                    }
                    const ColorSet left(s.candidates(t).mask() & ~removed.mask());
                    if (left == s.candidates(t)) fail(no, "nothing to eliminate at vertex " + std::to_string(t));
                    if (left.empty()) fail(no, "vertex " + std::to_string(t) + " loses every color; cite a contradiction");
                    s.restrict(t, left);
                    entry.result += (entry.result.empty() ? "" : " ") + std::to_string(t) + " in " + to_string(left);
                }
                return false;
            }
            case StepKind::RunExtend: {
                if (!s.no_singleton_proved()) fail(no, "run extension used before the no-singleton lemma");
                if (s.has_bichromatic()) fail(no, "run extension does not apply with a bi-chromatic vertex");
                if (step.sources.size() != 2 || rim_wrap(step.sources[1]) != rim_wrap(step.sources[0] + 1)) {
                    fail(no, "run extension cites a consecutive pair (i, i+1)");
                }
                const int i = step.sources[0];
                const auto ci = s.color(i);
                const auto cj = s.color(i + 1);
                if (!ci || !cj || *ci == *cj) fail(no, "pair must carry two different determined colors");
                for (int t : step.targets) {
                    int c = 0;
                    if (rim_wrap(t) == rim_wrap(i - 1)) c = *ci;
                    else if (rim_wrap(t) == rim_wrap(i + 2)) c = *cj;
                    else fail(no, "run extension only reaches i-1 and i+2");
                    if (!s.held(t).empty()) fail(no, "vertex " + std::to_string(t) + " is already colored");
                    if (!s.candidates(t).contains(c)) fail(no, "vertex " + std::to_string(t) + " cannot take color " + std::to_string(c));
                    s.assign(t, c);
                    entry.result += (entry.result.empty() ? "" : " ") + std::to_string(t) + "=" + std::to_string(c);
                }
                return false;
            }
            case StepKind::Branch: return apply_branch(step, no, s, depth, assumed, title, entry);
            case StepKind::CiteRefutedPattern: {
                if (step.targets.size() != 3) fail(no, "a cited pattern spans three consecutive vertices");
                const int v = step.targets[0];
                if (rim_wrap(step.targets[1]) != rim_wrap(v + 1) || rim_wrap(step.targets[2]) != rim_wrap(v + 2)) {
                    fail(no, "cited vertices are not consecutive");
                }
                const auto x = s.color(v), y = s.color(v + 1), z = s.color(v + 2);
                if (!x || !y || !z) fail(no, "cited vertices are not all colored");
                const bool distinct = *x != *y && *y != *z && *x != *z;
                const bool xyx = *x == *z && *x != *y;
                if (step.cited_case == 'a' && !distinct) fail(no, "case a needs three distinct colors");
                if (step.cited_case == 'b' && !xyx) fail(no, "case b needs the pattern x y x");
                if (step.cited_case != 'a' && step.cited_case != 'b') fail(no, "only cases a and b refute a pattern");
                entry.result = "instance of case " + std::string(1, step.cited_case);
                if (std::find(report_.reduced_to.begin(), report_.reduced_to.end(), step.cited_case) ==
                    report_.reduced_to.end()) {
                    report_.reduced_to.push_back(step.cited_case);
                }
                report_.rows.push_back({title, s, assumed, {rim_wrap(v), rim_wrap(v + 1), rim_wrap(v + 2)}});
                return true;
            }
            case StepKind::Contradiction: {
                if (step.targets.size() != 2) fail(no, "a contradiction cites one edge");
                const int a = step.targets[0], b = step.targets[1];
                if (!rim_adjacent(a, b)) fail(no, "vertices " + join(step.targets) + " are not adjacent");
                if (!s.held(a).intersects(s.held(b))) fail(no, "vertices " + join(step.targets) + " share no color");
                entry.result = "edge (" + join(step.targets) + ") joins color " + to_string(s.held(a) & s.held(b));
                if (!report_.contradiction) report_.contradiction = Edge{std::min(a, b), std::max(a, b)};
                report_.rows.push_back({title, s, assumed, {rim_wrap(a), rim_wrap(b)}});
                return true;
            }
        }
        fail(no, "unknown step kind");
    }

    bool apply_branch(const ProofStep& step, std::size_t no, DeductionState& s, int depth, const std::set<int>& assumed,
                      const std::string& title, TraceEntry& entry) {
        if (step.targets.size() != 1) fail(no, "branch on exactly one vertex");
        const int v = step.targets[0];
        if (!s.held(v).empty()) fail(no, "branch vertex " + std::to_string(v) + " is already colored");
        ColorSet admissible = s.candidates(v);
        for (int u : rim_neighbors(v)) admissible = ColorSet(admissible.mask() & ~s.held(u).mask());
        ColorSet covered;
        ColorSet proved;
        for (const BranchArm& arm : step.arms) {
            if (!admissible.contains(arm.color) || covered.contains(arm.color)) {
                fail(no, "branch arm color " + std::to_string(arm.color) + " is not admissible or repeated");
            }
            covered.insert(arm.color);
            if (!arm.by_swap) proved.insert(arm.color);
        }
        if (covered != admissible) fail(no, "branch arms do not cover " + to_string(admissible) + " at vertex " + std::to_string(v));
        entry.result = "vertex " + std::to_string(v) + " in " + to_string(admissible);
        report_.trace.push_back(entry);

        for (const BranchArm& arm : step.arms) {
            if (!arm.by_swap) continue;
            const auto [x, y] = *arm.by_swap;
            if (x < 1 || x > 3 || y < 1 || y > 3 || x == y) fail(no, "swap must exchange two colors of {1,2,3}");
            std::array<int, 4> perm = {0, 1, 2, 3};
            std::swap(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
            if (!(s.permuted(perm) == s)) {
                fail(no, "swapping colors " + std::to_string(x) + " and " + std::to_string(y) +
                             " is not a symmetry of the current state");
            }
            if (!proved.contains(perm[static_cast<std::size_t>(arm.color)])) {
                fail(no, "swap does not map arm " + std::to_string(arm.color) + " onto a proved arm");
            }
            report_.trace.push_back({++counter_, depth + 1, StepKind::Branch, {}, {v},
                                     "vertex " + std::to_string(v) + "=" + std::to_string(arm.color) +
                                         " follows by swapping colors " + std::to_string(x) + "," + std::to_string(y)});
        }
        for (const BranchArm& arm : step.arms) {
            if (arm.by_swap) continue;
            DeductionState child = s;
            child.assign(v, arm.color);
            std::set<int> arm_assumed = assumed;
            arm_assumed.insert(rim_wrap(v));
            report_.trace.push_back({++counter_, depth + 1, StepKind::Branch, {}, {v},
                                     "assume " + std::to_string(v) + "=" + std::to_string(arm.color)});
            replay_list(arm.steps, child, depth + 1, arm_assumed,
                        title + ", " + std::to_string(v) + "=" + std::to_string(arm.color), false);
        }
        return true;
    }

    ReplayReport& report_;
    std::size_t counter_ = 0;
};

}  // namespace

ReplayReport replay_script(const ProofScript& script, bool no_singleton_proved) {
    ReplayReport report;
    report.case_id = script.case_id;
    report.lemma_used = script.requires_no_singleton;
    if (script.requires_no_singleton && !no_singleton_proved) {
        throw ScriptValidationError(0, "script relies on the no-singleton lemma, which has not been established");
    }
    DeductionState start;
    start.set_no_singleton_proved(no_singleton_proved);
    Replayer(report).replay_list(script.steps, start, 0, {}, std::string(1, script.case_id), true);
    report.verified = true;
    return report;
}

ReplayReport replay_case(char case_id) {
    const ProofScript script = shipped_script(case_id);
    bool lemma = false;
    if (script.requires_no_singleton) {
        for (char dep : {'a', 'b'}) {
            if (!replay_case(dep).verified) throw ScriptValidationError(0, "lemma case " + std::string(1, dep) + " failed");
        }
        lemma = true;
    }
    ReplayReport report = replay_script(script, lemma);
    for (char cited : report.reduced_to) {
        if (cited != case_id) replay_case(cited);
    }
    if (script.expected_contradiction && report.contradiction != script.expected_contradiction) {
        throw ScriptValidationError(report.trace.empty() ? 0 : report.trace.back().step,
                                    "script closed on a different edge than expected");
    }
    std::vector<char> got = report.reduced_to, want = script.expected_reductions;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) throw ScriptValidationError(0, "script reduces to unexpected cases");
    return report;
}

std::string ReplayReport::summary() const {
    std::ostringstream out;
    out << "case " << case_id << ": ";
    if (!verified) return out.str() + "NOT verified";
    if (contradiction) out << "contradiction: vertices " << contradiction->first << "," << contradiction->second;
    if (!reduced_to.empty()) {
        if (contradiction) out << "; ";
        out << "reduces to case ";
        for (std::size_t i = 0; i < reduced_to.size(); ++i) out << (i ? "," : "") << reduced_to[i];
    }
    return out.str();
}

std::string transcript_text(const ReplayReport& report) {
    std::ostringstream out;
    out << "# replay of case " << report.case_id << "\n";
    if (report.lemma_used) out << "# no-singleton lemma established by cases a and b\n";
    for (const TraceEntry& e : report.trace) {
        out << std::string(static_cast<std::size_t>(2 * e.depth), ' ') << e.step << ". " << to_string(e.kind);
        if (!e.sources.empty()) out << " {" << join(e.sources) << "}";
        if (!e.targets.empty()) out << (e.sources.empty() ? " " : " => ") << "{" << join(e.targets) << "}";
        out << " : " << e.result << "\n";
    }
    out << report.summary() << "\n";
    return out.str();
}

std::string strip_svg(const ReplayReport& report) {
    constexpr int kCell = 26;
    constexpr int kLeft = 150;
    constexpr int kTop = 30;
    const int width = kLeft + kCell * kRimSize + 10;
    const int height = kTop + kCell * static_cast<int>(report.rows.size()) + 10;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int a = 1; a <= kRimSize; ++a) {
        out << "<text x=\"" << kLeft + (a - 1) * kCell + kCell / 2 << "\" y=\"" << kTop - 10
            << "\" font-size=\"12\" text-anchor=\"middle\">" << a << "</text>\n";
    }
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
        const ReplayRow& row = report.rows[r];
        const int y = kTop + static_cast<int>(r) * kCell;
        out << "<text x=\"4\" y=\"" << y + kCell / 2 + 4 << "\" font-size=\"11\">" << row.title << "</text>\n";
        for (int a = 1; a <= kRimSize; ++a) {
            const int x = kLeft + (a - 1) * kCell;
            const ColorSet held = row.state.held(a);
            std::string fill = "white";
            if (row.conflict.contains(a)) fill = "#bbbbbb";
            else if (held.size() == 1) fill = std::string(svg_color(held.min() - 1));
            const bool bordered = row.assumed.contains(a);
            out << "<rect x=\"" << x + 1 << "\" y=\"" << y + 1 << "\" width=\"" << kCell - 2 << "\" height=\""
                << kCell - 2 << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"" << (bordered ? 3 : 0.5)
                << "\"/>\n";
            std::string digits;
            for (int c : held.colors()) digits += static_cast<char>('0' + c);
            if (!digits.empty()) {
                out << "<text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 4
                    << "\" font-size=\"12\" text-anchor=\"middle\">" << digits << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace chroma
