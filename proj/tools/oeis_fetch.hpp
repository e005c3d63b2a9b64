#pragma once

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgram/verify/oeis.hpp"

namespace permgram {

class FetchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_oeis_id(const std::string& id)
{
    return id.size() == 7 && id[0] == 'A' && id.find_first_not_of("0123456789", 1) == std::string::npos;
}

// Terms from the b-file of `id` ("n a(n)" lines).
inline std::vector<Integer> fetch_bfile(const std::string& id)
{
    if (!is_oeis_id(id))
        throw FetchError("'" + id + "' is not an A-number");
    httplib::SSLClient cli("oeis.org", 443);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(20);
    cli.set_follow_location(true);
    std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto res = cli.Get(path);
    if (!res)
        throw FetchError("fetching " + id + ": " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw FetchError("fetching " + id + ": HTTP " + std::to_string(res->status));
    std::vector<Integer> values;
    std::istringstream in(res->body);
    std::string raw;
    for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream words{std::string(line)};
        std::string index, value;
        if (!(words >> index >> value))
            throw ParseError("b-file line needs 'n a(n)'", line_no);
        values.push_back(detail::parse_integer(value, line_no));
    }
    if (values.empty())
        throw FetchError("empty b-file for " + id);
    return values;
}

} // namespace permgram
