#include "cnsl/common.hpp"

#include <charconv>
#include <cstdlib>
#include <system_error>
#include <thread>
#include <vector>

namespace cnsl {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, const std::string& context) {
    double out = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ParseError(context + ": not a number: '" + std::string(text) + "'");
    }
    return out;
}

long long parse_int(std::string_view text, const std::string& context) {
    long long out = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ParseError(context + ": not an integer: '" + std::string(text) + "'");
    }
    return out;
}

std::size_t resolve_thread_count(long long flag_value) {
    if (flag_value > 0) return static_cast<std::size_t>(flag_value);
    if (const char* env = std::getenv("CNSL_THREADS")) {
        long long v = std::strtoll(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace cnsl
