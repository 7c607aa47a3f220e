#include "ucf/ucf_format.hpp"

#include "ucf/errors.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ucf {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
    return s;
}

ElementSet parse_line(std::string_view line, int line_no)
{
    if (line == "-") return ElementSet{};
    Mask bits = 0;
    int previous = 0;
    while (!line.empty()) {
        std::size_t end = 0;
        while (end < line.size() && !is_blank(line[end])) ++end;
        const std::string_view token = line.substr(0, end);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line_no, "expected a positive integer, got '" + std::string(token) + "'");
        if (value < 1 || value > max_element)
            throw ParseError(line_no, "element " + std::string(token) + " outside 1.." + std::to_string(max_element));
        if (value <= previous) throw ParseError(line_no, "elements must be strictly ascending");
        bits |= Mask{1} << (value - 1);
        previous = value;
        line = trim(line.substr(end));
    }
    return ElementSet::from_bits(bits);
}

}  // namespace

SetFamily parse_ucf(std::string_view text)
{
    std::vector<ElementSet> sets;
    std::set<ElementSet> seen;
    int line_no = 0;
    int last_line = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const ElementSet set = parse_line(line, line_no);
        if (!seen.insert(set).second) throw ParseError(line_no, "duplicate set {" + set.to_string() + "}");
        sets.push_back(set);
        last_line = line_no;
    }
    if (sets.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no sets in input");
    try {
        return SetFamily::from_sets(std::move(sets));
    } catch (const InputError& e) {
        throw ParseError(last_line, e.what());
    }
}

SetFamily read_ucf_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ucf(buffer.str());
}

void write_ucf(std::ostream& out, const SetFamily& family)
{
    for (ElementSet m : family.members()) out << m.to_string() << '\n';
}

std::string format_ucf(const SetFamily& family)
{
    std::ostringstream out;
    write_ucf(out, family);
    return out.str();
}

}  // namespace ucf
