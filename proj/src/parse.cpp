#include "comaj/parse.hpp"

#include <charconv>

namespace comaj {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

int parse_int(std::string_view s, std::string_view context)
{
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed integer '" + std::string(s) + "' in " + std::string(context));
    return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view context)
{
    std::vector<int> out;
    if (trim(s).empty())
        return out;
    for (auto part : split(s, ','))
        out.push_back(parse_int(part, context));
    return out;
}

Permutation make_permutation(std::vector<int> word, std::string_view text)
{
    try {
        return Permutation(std::move(word));
    } catch (const std::invalid_argument&) {
        throw ParseError("'" + std::string(text) + "' is not a permutation");
    }
}

}  // namespace

Permutation parse_permutation(std::string_view text)
{
    text = trim(text);
    if (text.find(',') != std::string_view::npos)
        return make_permutation(parse_int_list(text, "permutation"), text);
    std::vector<int> word;
    for (char c : text) {
        if (c < '1' || c > '9')
            throw ParseError("'" + std::string(text) + "' is not a permutation");
        word.push_back(c - '0');
    }
    return make_permutation(std::move(word), text);
}

std::vector<Permutation> parse_permutation_list(std::string_view text)
{
    text = trim(text);
    std::vector<Permutation> out;
    if (text.empty())
        return out;
    const char sep = text.find(';') != std::string_view::npos ? ';' : ',';
    for (auto part : split(text, sep)) {
        if (part.empty())
            throw ParseError("empty permutation in '" + std::string(text) + "'");
        out.push_back(parse_permutation(part));
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    auto parts = parse_int_list(text, "partition");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError("'" + std::string(text) + "' is not a partition: " + e.what());
    }
}

DescentSet parse_descent_set(std::string_view text, int n)
{
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}')
            throw ParseError("unbalanced braces in '" + std::string(text) + "'");
        text = text.substr(1, text.size() - 2);
    }
    DescentSet R;
    try {
        R = DescentSet(n);
        for (int i : parse_int_list(text, "set"))
            R.insert(i);
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError("'" + std::string(text) + "' is not a subset of {1.." + std::to_string(n - 1) + "}");
    }
    return R;
}

StandardTableau parse_tableau(std::string_view text)
{
    std::vector<std::vector<int>> rows;
    for (auto row : split(trim(text), '/'))
        rows.push_back(parse_int_list(row, "tableau"));
    try {
        return StandardTableau(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError("'" + std::string(text) + "' is not a standard tableau: " + e.what());
    }
}

}  // namespace comaj
