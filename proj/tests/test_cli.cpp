#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string binary_path()
{
    const char* path = std::getenv("MULLREG_BIN");
    REQUIRE_MESSAGE(path != nullptr, "MULLREG_BIN must point at the CLI binary");
    return path;
}

RunResult run(const std::string& args)
{
    const std::string command = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("operator subcommands print exponent notation")
{
    CHECK(run("mull --e 3 --partition 3^2,2^2,1").output == "6,4,1\n");
    CHECK(run("reg --e 3 --partition 4,3^3,1^5").output == "5,4,3^2,2,1\n");
    CHECK(run("strip-i --e 3 --partition 10,6^2,4,2").output == "7,5,4,1\n");
    CHECK(run("strip-j --e 3 --partition 10,6^2,4,2").output == "8,6,5,2\n");
    CHECK(run("conjugate --partition 4,3^3,1^5").output == "9,4^2,1\n");
    CHECK(run("s-op --e 3 --partition 9,5,2,1^5").output == "7,3,1^5\n");
    CHECK(run("mull --e 3 --partition 3^2,2^2,1").exit_code == 0);
}

TEST_CASE("--json emits partition arrays")
{
    CHECK(run("conjugate --partition 4,3^3,1^5 --json").output == "[9,4,4,1]\n");
    CHECK(run("conjugate --partition '()' --json").output == "[]\n");
    CHECK(run("mull --e 4 --partition 14,10,2^2 --json").output
          == "[5,5,4,4,3,3,2,2]\n");
}

TEST_CASE("rim subcommand")
{
    const RunResult plain = run("rim --e 3 --partition 10,6^2,4,2");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("r = 11") != std::string::npos);
    CHECK(plain.output.find("m = 7") != std::string::npos);
    CHECK(plain.output.find("l' = 4") != std::string::npos);

    const RunResult json = run("rim --e 3 --partition 10,6^2,4,2 --json");
    const auto parsed = nlohmann::json::parse(json.output);
    CHECK(parsed["r"] == 11);
    CHECK(parsed["m"] == 7);
    CHECK(parsed["l_prime"] == 4);
    CHECK(parsed["rim"].size() == 11);
    CHECK(parsed["truncated_rim"].size() == 7);
}

TEST_CASE("hooks and lpart subcommands")
{
    const auto hooks = nlohmann::json::parse(
        run("hooks --e 4 --partition 11,2^2,1^5 --json").output);
    CHECK(hooks["w"] == 5);
    CHECK(hooks["z"] == 2);
    CHECK(hooks["z_conj"] == 3);
    CHECK(hooks["nodes"].size() == 20);

    CHECK(run("lpart --e 4 --partition 11,2^2,1^5").output == "true\n");
    const RunResult bad = run("lpart --e 6 --partition 5,2,1^4");
    CHECK(bad.exit_code == 0); // a false answer is still a successful query
    CHECK(bad.output.find("false") == 0);
    CHECK(bad.output.find("(2,1)") != std::string::npos);

    const auto lpart_json =
        nlohmann::json::parse(run("lpart --e 6 --partition 5,2,1^4 --json").output);
    CHECK(lpart_json["is_l_partition"] == false);
    CHECK(lpart_json["witness"]["row"] == 2);
    CHECK(lpart_json["witness"]["col"] == 1);
}

TEST_CASE("show renders annotated diagrams")
{
    const RunResult ladders = run("show --annotate ladders --e 3 --partition 4,3^3,1^5");
    CHECK(ladders.output.rfind("1357\n", 0) == 0);
    const RunResult rim = run("show --annotate e-rim --e 3 --partition 10,6^2,4,2");
    CHECK(rim.output.find(".......xxx") != std::string::npos);
    CHECK(run("show --partition 3,1").output == "...\n.\n");
}

TEST_CASE("usage and precondition violations exit with status 2")
{
    CHECK(run("mull --e 3 --partition 3,5").exit_code == 2);   // not a partition
    CHECK(run("mull --e 3 --partition 1^3").exit_code == 2);   // 3-singular
    CHECK(run("mull --e 1 --partition 2,1").exit_code == 2);   // e < 2
    CHECK(run("s-op --e 6 --partition 5,2,1^4").exit_code == 2); // not an L-partition
    CHECK(run("mull --partition 2,1").exit_code == 2);         // missing --e
    CHECK(run("frobnicate").exit_code == 2);                   // unknown subcommand
    CHECK(run("show --annotate ladders --partition 2,1").exit_code == 2);
    CHECK(run("check --e-range 6..2").exit_code == 2);
}

TEST_CASE("check subcommand reports and exit codes")
{
    const RunResult tiny = run("check --suite main --max-n 0 --e-range 2..3 --json");
    CHECK(tiny.exit_code == 0);
    const auto parsed = nlohmann::json::parse(tiny.output);
    REQUIRE(parsed.size() == 2);
    for (const auto& entry : parsed) {
        CHECK(entry["check_id"] == "main");
        CHECK(entry["instances_checked"] == 1);
        CHECK(entry["pass"] == true);
        CHECK(entry["elapsed"].is_null());
    }

    const RunResult text = run("check --suite main --max-n 6 --e-range 3");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("pass") != std::string::npos);

    const std::string cmd = "check --suite all --max-n 6 --e-range 2..4 --json";
    const RunResult first = run(cmd);
    const RunResult second = run(cmd + " --serial --threads 2");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}
