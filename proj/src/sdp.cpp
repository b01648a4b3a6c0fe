#include "bwc/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bwc {

void LoweredSdp::validate() const {
    if (static_cast<int>(c.size()) != m || static_cast<int>(f.size()) != m)
        throw std::invalid_argument("LoweredSdp: inconsistent variable count");
    auto check_entry = [&](const Entry& e) {
        if (e.block < 0 || e.block >= static_cast<int>(block_dims.size()))
            throw std::invalid_argument("LoweredSdp: entry block out of range");
        int dim = std::abs(block_dims[e.block]);
        if (e.row < 0 || e.col < e.row || e.col >= dim)
            throw std::invalid_argument("LoweredSdp: entry indices out of range");
        if (block_dims[e.block] < 0 && e.row != e.col)
            throw std::invalid_argument("LoweredSdp: off-diagonal entry in a diagonal block");
        if (!std::isfinite(e.value))
            throw std::invalid_argument("LoweredSdp: non-finite coefficient");
    };
    for (const Entry& e : f0) check_entry(e);
    for (const auto& fi : f)
        for (const Entry& e : fi) check_entry(e);
}

int SdpProblem::add_block(const std::string& nm, int dim) {
    if (dim < 1) throw std::invalid_argument("SdpProblem: block dimension must be >= 1");
    blocks.push_back({nm, dim});
    return static_cast<int>(blocks.size()) - 1;
}

int SdpProblem::add_scalar(const std::string& nm, bool nonneg) {
    scalars.push_back({nm, nonneg});
    return static_cast<int>(scalars.size()) - 1;
}

namespace {

// affine expression over the final solver variables
struct Affine {
    double constant = 0.0;
    std::map<int, double> coef;

    void add(int var, double v) {
        if (v == 0.0) return;
        coef[var] += v;
        if (coef[var] == 0.0) coef.erase(var);
    }
    void add(const Affine& o, double scale) {
        constant += scale * o.constant;
        for (const auto& [k, v] : o.coef) add(k, scale * v);
    }
};

}  // namespace

LoweredSdp SdpProblem::lower() const {
    // solver variable layout: all matrix upper-triangle entries first, then
    // scalars; equality-eliminated variables get substituted afterwards
    LoweredSdp out;
    out.name = name;

    std::vector<std::map<std::pair<int, int>, int>> entry_var(blocks.size());
    std::vector<std::string> names;
    int nv = 0;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int r = 0; r < blocks[b].dim; ++r)
            for (int cl = r; cl < blocks[b].dim; ++cl) {
                entry_var[b][{r, cl}] = nv++;
                names.push_back(blocks[b].name + "[" + std::to_string(r) + "," + std::to_string(cl) + "]");
            }
    std::vector<int> scalar_var(scalars.size());
    for (size_t s = 0; s < scalars.size(); ++s) {
        scalar_var[s] = nv++;
        names.push_back(scalars[s].name);
    }

    auto term_var = [&](const Term& t) -> int {
        if (t.scalar >= 0) return scalar_var[t.scalar];
        return entry_var[t.block].at({t.row, t.col});
    };

    // substitution table: var -> affine over surviving variables
    std::vector<std::optional<Affine>> subst(nv);
    auto resolve = [&](int var) -> Affine {
        Affine a;
        if (subst[var]) {
            // substitutions are created over already-resolved variables
            return *subst[var];
        }
        a.add(var, 1.0);
        return a;
    };
    auto to_affine = [&](const std::vector<Term>& terms) {
        Affine a;
        for (const Term& t : terms) a.add(resolve(term_var(t)), t.coef);
        return a;
    };

    std::vector<std::pair<Affine, std::string>> inequalities;   // affine <= 0
    for (const Constraint& con : constraints) {
        Affine a = to_affine(con.terms);
        a.constant -= con.rhs;
        if (con.rel == Rel::LessEq) {
            inequalities.push_back({std::move(a), con.name});
            continue;
        }
        // equality: eliminate the variable with the largest coefficient
        if (a.coef.empty()) {
            if (std::abs(a.constant) > 1e-12)
                throw std::invalid_argument("SdpProblem: contradictory equality " + con.name);
            continue;
        }
        // prefer eliminating a matrix-entry variable (these equalities
        // usually define block entries in terms of the scalars)
        int first_scalar = nv - static_cast<int>(scalars.size());
        auto pick = a.coef.end();
        for (auto it = a.coef.begin(); it != a.coef.end(); ++it) {
            if (pick == a.coef.end()) { pick = it; continue; }
            bool it_entry = it->first < first_scalar, pk_entry = pick->first < first_scalar;
            if (it_entry != pk_entry) {
                if (it_entry) pick = it;
                continue;
            }
            if (std::abs(it->second) > std::abs(pick->second)) pick = it;
        }
        int var = pick->first;
        double pivot = pick->second;
        Affine repl;
        repl.constant = -a.constant / pivot;
        for (const auto& [k, v] : a.coef)
            if (k != var) repl.add(k, -v / pivot);
        subst[var] = repl;
        // update previously created substitutions and pending inequalities
        for (auto& so : subst) {
            if (!so || so->coef.find(var) == so->coef.end()) continue;
            double cv = so->coef[var];
            so->coef.erase(var);
            so->add(repl, cv);
        }
        for (auto& [ineq, nm] : inequalities) {
            auto it = ineq.coef.find(var);
            if (it == ineq.coef.end()) continue;
            double cv = it->second;
            ineq.coef.erase(it);
            ineq.add(repl, cv);
        }
    }

    // final variable numbering over surviving variables
    std::vector<int> final_index(nv, -1);
    for (int v = 0; v < nv; ++v)
        if (!subst[v]) {
            final_index[v] = out.m++;
            out.var_names.push_back(names[v]);
        }
    out.c.assign(out.m, 0.0);
    out.f.resize(out.m);

    auto final_affine = [&](int var) {
        Affine a = resolve(var);
        return a;
    };

    // objective
    {
        Affine a;
        for (const Term& t : objective) a.add(resolve(term_var(t)), t.coef);
        out.obj_constant = objective_constant + a.constant;
        for (const auto& [k, v] : a.coef) out.c[final_index[k]] += v;
    }

    // PSD matrix variables become blocks of X(x)
    for (size_t b = 0; b < blocks.size(); ++b) {
        out.block_dims.push_back(blocks[b].dim);
        for (int r = 0; r < blocks[b].dim; ++r)
            for (int cl = r; cl < blocks[b].dim; ++cl) {
                Affine a = final_affine(entry_var[b].at({r, cl}));
                if (a.constant != 0.0)
                    out.f0.push_back({static_cast<int>(b), r, cl, a.constant});
                for (const auto& [k, v] : a.coef)
                    out.f[final_index[k]].push_back({static_cast<int>(b), r, cl, v});
            }
    }

    // diagonal block: nonnegative scalars, then inequality slacks
    int diag_size = 0;
    std::vector<std::pair<Affine, std::string>> diag_slots;
    for (size_t s = 0; s < scalars.size(); ++s) {
        if (!scalars[s].nonneg) continue;
        diag_slots.push_back({final_affine(scalar_var[s]), scalars[s].name + ">=0"});
    }
    for (auto& [ineq, nm] : inequalities) {
        Affine slack;
        slack.add(ineq, -1.0);   // slack = -(expr) >= 0
        diag_slots.push_back({slack, nm});
    }
    diag_size = static_cast<int>(diag_slots.size());
    if (diag_size > 0) {
        int db = static_cast<int>(out.block_dims.size());
        out.block_dims.push_back(-diag_size);
        for (int p = 0; p < diag_size; ++p) {
            const Affine& a = diag_slots[p].first;
            if (a.constant != 0.0) out.f0.push_back({db, p, p, a.constant});
            for (const auto& [k, v] : a.coef) out.f[final_index[k]].push_back({db, p, p, v});
        }
    }

    out.validate();
    return out;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string export_sdpa(const LoweredSdp& p) {
    p.validate();
    std::ostringstream os;
    // the format has no slot for an affine objective offset; keep it in a
    // comment our own parser understands and others skip
    if (p.obj_constant != 0.0) os << "*OFFSET " << fmt_double(-p.obj_constant) << "\n";
    os << p.m << "\n";
    os << p.block_dims.size() << "\n";
    for (size_t b = 0; b < p.block_dims.size(); ++b)
        os << (b ? " " : "") << p.block_dims[b];
    os << "\n";
    for (int i = 0; i < p.m; ++i)
        os << (i ? " " : "") << fmt_double(-p.c[i]);
    os << "\n";
    // deterministic entry order: matno, block, row, col
    auto emit = [&](int matno, std::vector<LoweredSdp::Entry> entries, double scale) {
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return std::tie(a.block, a.row, a.col) < std::tie(b.block, b.row, b.col);
        });
        for (const auto& e : entries) {
            double v = scale * e.value;
            if (v == 0.0) continue;
            os << matno << " " << e.block + 1 << " " << e.row + 1 << " " << e.col + 1 << " " << fmt_double(v)
               << "\n";
        }
    };
    emit(0, p.f0, -1.0);   // SDPA convention: X = sum x_i F_i - F0
    for (int i = 0; i < p.m; ++i) emit(i + 1, p.f[i], 1.0);
    return os.str();
}

LoweredSdp parse_sdpa(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_data_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '"' || line[i] == '*' || line[i] == '#') continue;
            return line;
        }
        throw std::runtime_error("parse_sdpa: unexpected end of input");
    };
    LoweredSdp p;
    // scan leading comments for our offset marker before the first data line
    {
        std::istringstream scan(text);
        std::string l;
        while (std::getline(scan, l)) {
            size_t i = l.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (l[i] != '"' && l[i] != '*' && l[i] != '#') break;
            if (l.compare(i, 7, "*OFFSET") == 0) p.obj_constant = -std::stod(l.substr(i + 7));
        }
    }
    p.m = std::stoi(next_data_line());
    if (p.m < 0) throw std::runtime_error("parse_sdpa: negative variable count");
    int nblocks = std::stoi(next_data_line());
    {
        std::istringstream bs(next_data_line());
        for (int b = 0; b < nblocks; ++b) {
            std::string tok;
            if (!(bs >> tok)) throw std::runtime_error("parse_sdpa: too few block sizes");
            // tolerate the common "{...}" punctuation
            std::string clean;
            for (char ch : tok)
                if (ch != '{' && ch != '}' && ch != '(' && ch != ')' && ch != ',') clean.push_back(ch);
            p.block_dims.push_back(std::stoi(clean));
            if (p.block_dims.back() == 0) throw std::runtime_error("parse_sdpa: zero block size");
        }
    }
    {
        std::istringstream cs(next_data_line());
        p.c.resize(p.m);
        for (int i = 0; i < p.m; ++i) {
            double v;
            if (!(cs >> v)) throw std::runtime_error("parse_sdpa: too few objective values");
            p.c[i] = -v;
        }
    }
    p.f.resize(p.m);
    std::map<std::tuple<int, int, int, int>, double> seen;
    int matno, block, row, col;
    double value;
    while (in >> matno >> block >> row >> col >> value) {
        if (matno < 0 || matno > p.m) throw std::runtime_error("parse_sdpa: matrix index out of range");
        if (block < 1 || block > nblocks) throw std::runtime_error("parse_sdpa: block index out of range");
        int dim = std::abs(p.block_dims[block - 1]);
        if (row < 1 || col < row || col > dim)
            throw std::runtime_error("parse_sdpa: entry indices out of range (need row <= col)");
        auto key = std::make_tuple(matno, block, row, col);
        if (seen.count(key)) throw std::runtime_error("parse_sdpa: duplicate entry");
        seen[key] = value;
        LoweredSdp::Entry e{block - 1, row - 1, col - 1, matno == 0 ? -value : value};
        if (matno == 0) p.f0.push_back(e);
        else p.f[matno - 1].push_back(e);
    }
    p.validate();
    return p;
}

}  // namespace bwc
