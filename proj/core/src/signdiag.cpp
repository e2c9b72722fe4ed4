#include "nchodge/signdiag.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nchodge {

namespace {

int par(int d) { return d & 1; }

void check_strand(const Strand& s) {
    if (s.red && s.degree != 1)
        throw std::runtime_error("signdiag: red strand must carry degree +1");
}

// Shared simulation: validates as it walks, optionally accumulating the
// crossing parity into *sgn.
std::vector<Strand> walk(const SignDiagram& D, int* sgn) {
    std::vector<Strand> cur = D.top;
    for (const Strand& s : cur) check_strand(s);
    for (const auto& e : D.events) {
        if (const auto* sw = std::get_if<SwapEvent>(&e)) {
            if (sw->pos < 0 || sw->pos + 1 >= (int)cur.size())
                throw std::runtime_error("signdiag: swap out of range");
            if (sgn) *sgn ^= par(cur[sw->pos].degree) & par(cur[sw->pos + 1].degree);
            std::swap(cur[sw->pos], cur[sw->pos + 1]);
        } else {
            const auto& v = std::get<VertexEvent>(e);
            if (v.pos < 0 || v.nin < 0 || v.pos + v.nin > (int)cur.size())
                throw std::runtime_error("signdiag: vertex out of range");
            long in_sum = 0;
            for (int q = 0; q < v.nin; ++q) in_sum += cur[v.pos + q].degree;
            long out_sum = 0;
            for (const Strand& s : v.out) {
                check_strand(s);
                out_sum += s.degree;
            }
            if (in_sum != out_sum)
                throw std::runtime_error("signdiag: unbalanced vertex");
            cur.erase(cur.begin() + v.pos, cur.begin() + v.pos + v.nin);
            cur.insert(cur.begin() + v.pos, v.out.begin(), v.out.end());
        }
    }
    return cur;
}

struct Foot {
    int lo;
    int hi_in;  // last input position (lo-1 when no inputs)
    int hi_out; // last output position (lo-1 when no outputs)
    int delta;  // strand count change
};

Foot foot(const DiagEvent& e) {
    if (const auto* sw = std::get_if<SwapEvent>(&e))
        return {sw->pos, sw->pos + 1, sw->pos + 1, 0};
    const auto& v = std::get<VertexEvent>(e);
    int nout = (int)v.out.size();
    return {v.pos, v.pos + v.nin - 1, v.pos + nout - 1, nout - v.nin};
}

DiagEvent shifted(const DiagEvent& e, int by) {
    if (const auto* sw = std::get_if<SwapEvent>(&e)) return SwapEvent{sw->pos + by};
    VertexEvent v = std::get<VertexEvent>(e);
    v.pos += by;
    return v;
}

[[noreturn]] void not_applicable() {
    throw std::runtime_error("signdiag: move not applicable");
}

SignDiagram commute(const SignDiagram& D, int i) {
    if (i < 0 || i + 1 >= (int)D.events.size()) not_applicable();
    const DiagEvent& e = D.events[i];
    const DiagEvent& f = D.events[i + 1];
    Foot fe = foot(e), ff = foot(f);
    SignDiagram out = D;
    if (ff.hi_in < fe.lo && ff.hi_out < fe.lo) {
        // f acts strictly left of e: e's positions shift by f's delta.
        out.events[i] = f;
        out.events[i + 1] = shifted(e, ff.delta);
    } else if (ff.lo > fe.hi_out && ff.lo > fe.hi_in) {
        // f acts strictly right of e's outputs: undo e's renumbering.
        out.events[i] = shifted(f, -fe.delta);
        out.events[i + 1] = e;
    } else {
        not_applicable();
    }
    return out;
}

SignDiagram braid(const SignDiagram& D, int i) {
    if (i < 0 || i + 2 >= (int)D.events.size()) not_applicable();
    const auto* a = std::get_if<SwapEvent>(&D.events[i]);
    const auto* b = std::get_if<SwapEvent>(&D.events[i + 1]);
    const auto* c = std::get_if<SwapEvent>(&D.events[i + 2]);
    if (!a || !b || !c) not_applicable();
    if (a->pos != c->pos || (b->pos != a->pos + 1 && b->pos != a->pos - 1))
        not_applicable();
    SignDiagram out = D;
    out.events[i] = SwapEvent{b->pos};
    out.events[i + 1] = SwapEvent{a->pos};
    out.events[i + 2] = SwapEvent{b->pos};
    return out;
}

// Matches a descending chain of n swaps at positions p+n-1, ..., p starting
// at events[i].
bool match_chain(const SignDiagram& D, int i, int p, int n) {
    if (i + n > (int)D.events.size()) return false;
    for (int q = 0; q < n; ++q) {
        const auto* sw = std::get_if<SwapEvent>(&D.events[i + q]);
        if (!sw || sw->pos != p + n - 1 - q) return false;
    }
    return true;
}

void emit_chain(std::vector<DiagEvent>& ev, int p, int n) {
    for (int q = 0; q < n; ++q) ev.push_back(SwapEvent{p + n - 1 - q});
}

SignDiagram slide_vertex(const SignDiagram& D, int i) {
    if (i < 0 || i >= (int)D.events.size()) not_applicable();
    // Direction (a): vertex at p, then a chain sliding the strand just right
    // of the outputs across all of them; rewrite to chain-across-inputs, then
    // the vertex one position right.
    if (const auto* v = std::get_if<VertexEvent>(&D.events[i])) {
        int nout = (int)v->out.size();
        if (nout >= 1 && match_chain(D, i + 1, v->pos, nout)) {
            SignDiagram out = D;
            std::vector<DiagEvent> repl;
            emit_chain(repl, v->pos, v->nin);
            VertexEvent v2 = *v;
            v2.pos += 1;
            repl.push_back(v2);
            out.events.erase(out.events.begin() + i, out.events.begin() + i + 1 + nout);
            out.events.insert(out.events.begin() + i, repl.begin(), repl.end());
            return out;
        }
    }
    // Direction (b): a chain sliding a strand across what will be the vertex
    // inputs, then the vertex one position right; rewrite to vertex-first,
    // then chain-across-outputs.
    for (int n = 1; i + n < (int)D.events.size(); ++n) {
        const auto* v = std::get_if<VertexEvent>(&D.events[i + n]);
        if (!v) continue;
        if (v->nin != n) break;
        if (v->pos < 1 || !match_chain(D, i, v->pos - 1, n)) break;
        SignDiagram out = D;
        std::vector<DiagEvent> repl;
        VertexEvent v2 = *v;
        v2.pos -= 1;
        repl.push_back(v2);
        emit_chain(repl, v2.pos, (int)v2.out.size());
        out.events.erase(out.events.begin() + i, out.events.begin() + i + n + 1);
        out.events.insert(out.events.begin() + i, repl.begin(), repl.end());
        return out;
    }
    not_applicable();
}

// Incremental builder: tracks the live strand list so vertex outputs can be
// balanced automatically.
struct Builder {
    SignDiagram D;
    std::vector<Strand> cur;

    void strand(int deg, bool red = false) {
        Strand s{deg, red};
        check_strand(s);
        D.top.push_back(s);
        cur.push_back(s);
    }
    void swap_at(int p) {
        D.events.push_back(SwapEvent{p});
        std::swap(cur[p], cur[p + 1]);
    }
    // Moves the strand at `from` to `to` via adjacent transpositions.
    void move(int from, int to) {
        for (int p = from; p < to; ++p) swap_at(p);
        for (int p = from; p > to; --p) swap_at(p - 1);
    }
    // Moves the last i strands of the range [base, base+s] in front of the
    // first s+1-i, one strand at a time (i*(s+1-i) transpositions).
    void block_rotate(int base, int s, int i) {
        for (int r = 0; r < i; ++r)
            for (int p = base + s - i + r; p >= base + r; --p) swap_at(p);
    }
    // Contracts strands [pos, pos+nin) into a single balanced output strand.
    void vertex(int pos, int nin) {
        long sum = 0;
        for (int q = 0; q < nin; ++q) sum += cur[pos + q].degree;
        VertexEvent v{pos, nin, {Strand{(int)sum, false}}};
        D.events.push_back(v);
        cur.erase(cur.begin() + pos, cur.begin() + pos + nin);
        cur.insert(cur.begin() + pos, v.out[0]);
    }
};

void check_word(const FormulaTerm& t) {
    if (t.rdeg.empty()) throw std::runtime_error("signdiag: empty word");
    int s = (int)t.rdeg.size() - 1;
    if (t.i < 0 || t.i > s) throw std::runtime_error("signdiag: rotation out of range");
}

// Shared layout for the cochain templates: head strand (red cap strand or
// unit strand), cochain strands, word strands. Cochain strand l sweeps right
// across rotated positions 0..first_l-1 to sit against its block.
void cochain_layout(Builder& b, const FormulaTerm& t, bool unit_head) {
    int s = (int)t.rdeg.size() - 1;
    int p = (int)t.blocks.size();
    if ((int)t.phi_rdeg.size() != p)
        throw std::runtime_error("signdiag: cochain degree count mismatch");
    if (unit_head) b.strand(-1);
    else b.strand(1, true);
    for (int l = 0; l < p; ++l) b.strand(t.phi_rdeg[l]);
    for (int d : t.rdeg) b.strand(d);
    int base = 1 + p;
    b.block_rotate(base, s, t.i);
    int prev_last = -1;
    for (int l = 0; l < p; ++l) {
        auto [first, last] = t.blocks[l];
        if (first < 0 || last < first || last >= s + 1)
            throw std::runtime_error("signdiag: cochain block out of range");
        if (first <= prev_last)
            throw std::runtime_error("signdiag: cochain blocks must be increasing");
        prev_last = last;
    }
    // Rightmost cochain strand travels first so the paths never cross.
    for (int l = p - 1; l >= 0; --l) b.move(1 + l, 1 + l + t.blocks[l].first);
    // Contract each block, leftmost first.
    int consumed = 0;
    for (int l = 0; l < p; ++l) {
        auto [first, last] = t.blocks[l];
        int len = last - first + 1;
        b.vertex(1 + l + first - consumed, 1 + len);
        consumed += len;
    }
}

} // namespace

std::vector<Strand> validate(const SignDiagram& D) { return walk(D, nullptr); }

int sigma(const SignDiagram& D) {
    int s = 0;
    walk(D, &s);
    return s;
}

SignDiagram isotopy_move(const SignDiagram& D, const Move& mv) {
    SignDiagram out;
    switch (mv.kind) {
        case MoveKind::Commute: out = commute(D, mv.index); break;
        case MoveKind::Braid: out = braid(D, mv.index); break;
        case MoveKind::SlideVertex: out = slide_vertex(D, mv.index); break;
        default: not_applicable();
    }
    validate(out);
    return out;
}

SignDiagram random_isotopy(const SignDiagram& D, int steps, Rng& rng, int* applied) {
    SignDiagram cur = D;
    int done = 0;
    for (int q = 0; q < steps; ++q) {
        if (cur.events.empty()) break;
        Move mv;
        switch (rng.below(3)) {
            case 0: mv.kind = MoveKind::Commute; break;
            case 1: mv.kind = MoveKind::Braid; break;
            default: mv.kind = MoveKind::SlideVertex; break;
        }
        mv.index = (int)rng.below(cur.events.size());
        try {
            cur = isotopy_move(cur, mv);
            ++done;
        } catch (const std::runtime_error&) {
            // inapplicable at this index; try another
        }
    }
    if (applied) *applied = done;
    return cur;
}

std::string diagram_to_text(const SignDiagram& D) {
    std::ostringstream os;
    for (const Strand& s : D.top) {
        os << "strand " << s.degree;
        if (s.red) os << " red";
        os << "\n";
    }
    for (const auto& e : D.events) {
        if (const auto* sw = std::get_if<SwapEvent>(&e)) {
            os << "swap " << sw->pos << "\n";
        } else {
            const auto& v = std::get<VertexEvent>(e);
            os << "vertex " << v.pos << " " << v.nin << " :";
            for (const Strand& s : v.out) {
                os << " " << s.degree;
                if (s.red) os << "r";
            }
            os << "\n";
        }
    }
    return os.str();
}

SignDiagram diagram_from_text(const std::string& text) {
    SignDiagram D;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "signdiag: parse error at line " << lineno << ": " << why;
        throw std::runtime_error(os.str());
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "strand") {
            Strand s;
            if (!(ls >> s.degree)) fail("expected strand degree");
            std::string flag;
            if (ls >> flag) {
                if (flag != "red") fail("unknown strand flag '" + flag + "'");
                s.red = true;
            }
            if (!D.events.empty()) fail("strand after events");
            D.top.push_back(s);
        } else if (word == "swap") {
            SwapEvent sw;
            if (!(ls >> sw.pos)) fail("expected swap position");
            D.events.push_back(sw);
        } else if (word == "vertex") {
            VertexEvent v;
            std::string colon;
            if (!(ls >> v.pos >> v.nin >> colon) || colon != ":")
                fail("expected 'vertex <pos> <nin> :'");
            std::string tok;
            while (ls >> tok) {
                Strand s;
                if (!tok.empty() && tok.back() == 'r') {
                    s.red = true;
                    tok.pop_back();
                }
                try {
                    size_t used = 0;
                    s.degree = std::stoi(tok, &used);
                    if (used != tok.size()) fail("bad output degree '" + tok + "'");
                } catch (const std::exception&) {
                    fail("bad output degree '" + tok + "'");
                }
                v.out.push_back(s);
            }
            D.events.push_back(v);
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    return D;
}

FormulaTerm FormulaTerm::rotation(std::vector<int> rdeg, int i) {
    FormulaTerm t;
    t.kind = "t";
    t.rdeg = std::move(rdeg);
    t.i = i;
    return t;
}

SignDiagram term_diagram(const FormulaTerm& t) {
    Builder b;
    int s = (int)t.rdeg.size() - 1;
    if (t.kind == "t") {
        check_word(t);
        for (int d : t.rdeg) b.strand(d);
        b.block_rotate(0, s, t.i);
    } else if (t.kind == "b-head") {
        check_word(t);
        if (t.j < t.i || t.j > s) throw std::runtime_error("signdiag: bad head split");
        // The operation's red strand enters at the left edge; the head vertex
        // is rooted there, so the red strand crosses nothing.
        b.strand(1, true);
        for (int d : t.rdeg) b.strand(d);
        b.block_rotate(1, s, t.i);
        b.vertex(0, 1 + (t.j + 1));
    } else if (t.kind == "b-internal") {
        check_word(t);
        if (t.j < -1 || t.k <= t.j || t.k > s)
            throw std::runtime_error("signdiag: bad internal block");
        // Red strand sweeps right from the left edge to the block, crossing
        // the head run: that crossing pattern is the whole sign.
        b.strand(1, true);
        for (int d : t.rdeg) b.strand(d);
        b.move(0, t.j + 1);
        b.vertex(t.j + 1, 1 + (t.k - t.j));
    } else if (t.kind == "b-cochain") {
        check_word(t);
        if (t.m < t.i || t.m > s) throw std::runtime_error("signdiag: bad head cap");
        for (const auto& blk : t.blocks)
            if (blk.second >= t.i)
                throw std::runtime_error("signdiag: cochain block not before the head");
        cochain_layout(b, t, false);
        int shrink = 0;
        for (const auto& blk : t.blocks) shrink += blk.second - blk.first;
        b.vertex(0, 1 + (t.m + 1) - shrink);
    } else if (t.kind == "connes-B" || t.kind == "B-cochain") {
        check_word(t);
        if (t.kind == "connes-B") {
            b.strand(-1);
            for (int d : t.rdeg) b.strand(d);
            b.block_rotate(1, s, t.i);
        } else {
            for (const auto& blk : t.blocks)
                if (blk.second >= t.i)
                    throw std::runtime_error("signdiag: cochain block not before the head");
            cochain_layout(b, t, true);
        }
    } else if (t.kind == "mukai-trace") {
        check_word(t);
        if (t.rdeg_b.empty()) throw std::runtime_error("signdiag: empty second word");
        int tt = (int)t.rdeg_b.size() - 1;
        if (t.ib < 0 || t.ib > tt || t.j < t.i || t.j > s || t.kb < t.ib || t.kb > tt)
            throw std::runtime_error("signdiag: bad trace shape");
        // Layout left to right: first word, second word, trace strand, outer
        // red strand, inner red strand. The inner red strand sweeps left to
        // its operation (crossing the outer red strand, the trace strand, the
        // whole second word and the tail of the first); the trace strand then
        // sweeps left across the second word; the outer red strand dives
        // straight down.
        for (int d : t.rdeg) b.strand(d);
        for (int d : t.rdeg_b) b.strand(d);
        b.strand(t.c_deg - 1);
        b.strand(1, true);
        b.strand(1, true);
        b.block_rotate(0, s, t.i);
        b.block_rotate(s + 1, tt, t.ib);
        b.move(s + tt + 4, t.j + 1);
        b.move(s + tt + 3, s + 2);
        b.vertex(t.j + 1, (s - t.j) + 2 + (t.kb + 1));
        b.vertex(0, (t.j + 1) + 1 + (tt - t.kb) + 1);
    } else {
        throw std::runtime_error("signdiag: unknown template '" + t.kind + "'");
    }
    return b.D;
}

int formula_sign(const FormulaTerm& t) { return sigma(term_diagram(t)); }

} // namespace nchodge
