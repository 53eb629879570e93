#include "pihom/groupalg.hpp"

#include <algorithm>
#include <sstream>

namespace pihom {

Word Word::concat(const Word& rhs) const
{
    Word out = *this;
    out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return out;
}

Word Word::inverse() const
{
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back(Letter{it->gen, -it->sign});
    return out;
}

std::string Word::to_string() const
{
    if (letters.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            os << " ";
        os << "g" << letters[i].gen + 1;
        if (letters[i].sign < 0)
            os << "^-1";
    }
    return os.str();
}

Word parse_word(const std::string& text, int rank)
{
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1")
            continue;
        int sign = 1;
        std::string body = tok;
        if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
            sign = -1;
            body = body.substr(0, body.size() - 3);
        }
        if (body.size() < 2 || body[0] != 'g')
            throw input_error("bad word token: " + tok);
        int g = 0;
        try {
            g = std::stoi(body.substr(1));
        } catch (const std::exception&) {
            throw input_error("bad word token: " + tok);
        }
        if (g < 1 || g > rank)
            throw input_error("generator out of range in token: " + tok);
        w.letters.push_back(Letter{g - 1, sign});
    }
    return w;
}

TruncElem TruncElem::unit(int rank, int level)
{
    TruncElem e;
    e.rank = rank;
    e.level = level;
    e.coeff[Monomial{}] = Rat(1);
    return e;
}

bool TruncElem::is_unit() const
{
    return coeff.size() == 1 && coeff.begin()->first.empty() &&
           coeff.begin()->second == 1;
}

Rat TruncElem::coefficient(const Monomial& m) const
{
    auto it = coeff.find(m);
    return it == coeff.end() ? Rat(0) : it->second;
}

void TruncElem::add_term(const Monomial& m, const Rat& c)
{
    if (c == 0 || static_cast<int>(m.size()) > level)
        return;
    auto [it, inserted] = coeff.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeff.erase(it);
    }
}

std::string TruncElem::to_string() const
{
    if (coeff.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeff) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str();
        for (int g : m)
            os << "*e" << g + 1;
    }
    return os.str();
}

namespace {

void require_compatible(const TruncElem& a, const TruncElem& b)
{
    if (a.level != b.level || a.rank != b.rank)
        throw input_error("truncation level mismatch");
}

}  // namespace

TruncElem trunc_mul(const TruncElem& a, const TruncElem& b)
{
    require_compatible(a, b);
    TruncElem out;
    out.rank = a.rank;
    out.level = a.level;
    for (const auto& [ma, ca] : a.coeff) {
        for (const auto& [mb, cb] : b.coeff) {
            if (static_cast<int>(ma.size() + mb.size()) > out.level)
                continue;
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

TruncElem trunc_scale(const TruncElem& a, const Rat& c)
{
    TruncElem out;
    out.rank = a.rank;
    out.level = a.level;
    if (c == 0)
        return out;
    for (const auto& [m, v] : a.coeff)
        out.coeff[m] = v * c;
    return out;
}

TruncElem trunc_add(const TruncElem& a, const TruncElem& b)
{
    require_compatible(a, b);
    TruncElem out = a;
    for (const auto& [m, v] : b.coeff)
        out.add_term(m, v);
    return out;
}

TruncElem trunc_project(const TruncElem& a)
{
    if (a.level < 1)
        throw input_error("cannot project below level 0");
    TruncElem out;
    out.rank = a.rank;
    out.level = a.level - 1;
    for (const auto& [m, v] : a.coeff)
        if (static_cast<int>(m.size()) <= out.level)
            out.coeff[m] = v;
    return out;
}

TruncElem magnus(const Word& w, int rank, int level)
{
    TruncElem acc = TruncElem::unit(rank, level);
    for (const Letter& l : w.letters) {
        if (l.gen < 0 || l.gen >= rank)
            throw input_error("letter outside generator range");
        TruncElem f;
        f.rank = rank;
        f.level = level;
        if (l.sign > 0) {
            f.coeff[Monomial{}] = Rat(1);
            f.add_term(Monomial{l.gen}, Rat(1));
        } else {
            // (1 + e)^{-1} = 1 - e + e⊗e - ... truncated.
            Rat c(1);
            for (int k = 0; k <= level; ++k) {
                f.add_term(Monomial(k, l.gen), c);
                c = -c;
            }
        }
        acc = trunc_mul(acc, f);
    }
    return acc;
}

std::vector<Monomial> monomial_basis(int rank, int level)
{
    std::vector<Monomial> out;
    out.push_back(Monomial{});
    std::vector<Monomial> prev = out;
    for (int d = 1; d <= level; ++d) {
        std::vector<Monomial> next;
        for (const Monomial& m : prev) {
            for (int g = 0; g < rank; ++g) {
                Monomial e = m;
                e.push_back(g);
                next.push_back(std::move(e));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(next);
    }
    return out;
}

QVec trunc_coords(const TruncElem& a)
{
    std::vector<Monomial> basis = monomial_basis(a.rank, a.level);
    QVec v = zero_vec(basis.size());
    std::map<Monomial, int> where;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        where[basis[i]] = i;
    for (const auto& [m, c] : a.coeff) {
        auto it = where.find(m);
        if (it == where.end())
            throw internal_error("monomial outside basis");
        v[it->second] = c;
    }
    return v;
}

QMatrix projection_matrix(int rank, int level)
{
    std::vector<Monomial> src = monomial_basis(rank, level);
    std::vector<Monomial> tgt = monomial_basis(rank, level - 1);
    std::map<Monomial, int> where;
    for (int i = 0; i < static_cast<int>(tgt.size()); ++i)
        where[tgt[i]] = i;
    QMatrix p(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        auto it = where.find(src[j]);
        if (it != where.end())
            p.set(it->second, j, Rat(1));
    }
    return p;
}

std::vector<std::pair<Word, Rat>> basis_lift(const Monomial& m)
{
    const int k = static_cast<int>(m.size());
    std::vector<std::pair<Word, Rat>> out;
    for (unsigned subset = 0; subset < (1u << k); ++subset) {
        Word w;
        int picked = 0;
        for (int i = 0; i < k; ++i) {
            if (subset & (1u << i)) {
                w.letters.push_back(Letter{m[i], 1});
                ++picked;
            }
        }
        out.emplace_back(std::move(w), Rat((k - picked) % 2 == 0 ? 1 : -1));
    }
    return out;
}

}  // namespace pihom
