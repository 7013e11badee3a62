#pragma once

// Plain-text fixture files. A file is split into named sections, each
// opened by a line "@name"; '#' starts a comment; blank lines are skipped.
// Every other line is kept as a whitespace-separated list of tokens.

#include "core.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnbox {

using FixtureRow = std::vector<std::string>;

class FixtureFile {
public:
    static FixtureFile load(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open fixture " + path.string());
        std::stringstream ss;
        ss << in.rdbuf();
        return parse(ss.str(), path.string());
    }

    static FixtureFile parse(const std::string &text, const std::string &origin = "<string>")
    {
        FixtureFile f;
        f.origin_ = origin;
        std::istringstream in(text);
        std::string line;
        std::string current;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ls(line);
            FixtureRow row;
            for (std::string tok; ls >> tok;)
                row.push_back(tok);
            if (row.empty())
                continue;
            if (row[0][0] == '@') {
                current = row[0].substr(1);
                if (current.empty())
                    throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty section name");
                if (f.sections_.count(current))
                    throw std::runtime_error(origin + ": duplicate section @" + current);
                f.order_.push_back(current);
                f.sections_[current];
                continue;
            }
            if (current.empty())
                throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": data before first section");
            f.sections_[current].push_back(std::move(row));
        }
        return f;
    }

    bool has(const std::string &name) const { return sections_.count(name) != 0; }
    const std::vector<std::string> &names() const { return order_; }

    const std::vector<FixtureRow> &section(const std::string &name) const
    {
        auto it = sections_.find(name);
        if (it == sections_.end())
            throw std::runtime_error(origin_ + ": missing section @" + name);
        return it->second;
    }

private:
    std::string origin_;
    std::vector<std::string> order_;
    std::map<std::string, std::vector<FixtureRow>> sections_;
};

/// Endpoint token: "3", "5/2".
inline int parse_endpoint(const std::string &tok)
{
    auto slash = tok.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad endpoint " + tok);
        return 2 * v;
    }
    if (tok.substr(slash + 1) != "2")
        throw std::invalid_argument("only halves are supported: " + tok);
    int v = std::stoi(tok.substr(0, slash), &used);
    if (used != slash)
        throw std::invalid_argument("bad endpoint " + tok);
    return v;
}

/// Interval token: "[0,1]", "0:1", "[1,5/2]".
inline Interval parse_interval(std::string tok)
{
    if (!tok.empty() && tok.front() == '[') {
        if (tok.back() != ']')
            throw std::invalid_argument("bad interval " + tok);
        tok = tok.substr(1, tok.size() - 2);
    }
    auto sep = tok.find_first_of(",:");
    if (sep == std::string::npos)
        throw std::invalid_argument("bad interval " + tok);
    return Interval{parse_endpoint(tok.substr(0, sep)), parse_endpoint(tok.substr(sep + 1))};
}

/// Box token: "[0,1]x[3,4]x[1,4]".
template <std::size_t N>
Box<N> parse_box(const std::string &tok)
{
    Box<N> b;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < N; ++k) {
        auto next = tok.find('x', pos);
        if ((next == std::string::npos) != (k + 1 == N))
            throw std::invalid_argument("bad box " + tok);
        b[k] = parse_interval(tok.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        pos = next + 1;
    }
    return b;
}

/// Combination token list: "2[0,1]" "[1,2]" ... (a leading integer is the multiplicity).
inline IntervalCombination parse_combination(const std::vector<std::string> &toks)
{
    IntervalCombination c;
    for (const auto &t : toks) {
        auto br = t.find('[');
        if (br == std::string::npos)
            throw std::invalid_argument("bad combination term " + t);
        int k = br == 0 ? 1 : std::stoi(t.substr(0, br));
        c.add(parse_interval(t.substr(br)), k);
    }
    return c;
}

inline IntervalCombination parse_combination(const std::string &text)
{
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : text) {
        if (ch == '+' || ch == ' ') {
            if (!cur.empty())
                toks.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        toks.push_back(cur);
    return parse_combination(toks);
}

template <std::size_t N>
std::vector<Box<N>> parse_boxes(const std::vector<FixtureRow> &rows)
{
    std::vector<Box<N>> out;
    for (const auto &r : rows)
        for (const auto &t : r)
            out.push_back(parse_box<N>(t));
    return out;
}

inline std::vector<std::vector<int>> parse_int_rows(const std::vector<FixtureRow> &rows)
{
    std::vector<std::vector<int>> out;
    for (const auto &r : rows) {
        std::vector<int> v;
        for (const auto &t : r)
            v.push_back(std::stoi(t));
        out.push_back(std::move(v));
    }
    return out;
}

/// Cycle notation "(1,12,7)(2,10)" on points 1..n, returned zero-based.
inline std::vector<int> parse_cycles(const std::string &text, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        auto close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unbalanced cycle " + text);
        std::vector<int> cyc;
        std::stringstream ss(text.substr(pos + 1, close - pos - 1));
        for (std::string tok; std::getline(ss, tok, ',');)
            cyc.push_back(std::stoi(tok) - 1);
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k];
            int b = cyc[(k + 1) % cyc.size()];
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::out_of_range("cycle point out of range");
            p[static_cast<std::size_t>(a)] = b;
        }
        pos = close + 1;
    }
    return p;
}

inline std::string join_row(const FixtureRow &r, std::size_t from = 0)
{
    std::string out;
    for (std::size_t k = from; k < r.size(); ++k) {
        if (k > from)
            out += ' ';
        out += r[k];
    }
    return out;
}

} // namespace nnbox
