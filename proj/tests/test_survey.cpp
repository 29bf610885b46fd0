// SPDX-License-Identifier: Apache-2.0
//
// pathloss: fitting and comparison toolkit for indoor mm-wave path loss models
// Copyright (C) 2026 pathloss contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "pathloss/csv.hpp"
#include "pathloss/survey.hpp"

using namespace pathloss;

namespace {

PathLossSample sample(double d, double pl, double f = 28e9, Polarization pol = Polarization::VV,
                      Scenario scen = Scenario::LOS) {
    PathLossSample s;
    s.distance_m = d;
    s.path_loss_db = pl;
    s.frequency_hz = f;
    s.polarization = pol;
    s.scenario = scen;
    return s;
}

bool message_contains(const ValidationError& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("label parsing") {
    CHECK(parse_polarization("VV") == Polarization::VV);
    CHECK(parse_polarization("vh") == Polarization::VH);
    CHECK(parse_polarization(" VOmni ") == Polarization::VOmni);
    CHECK_THROWS_AS(parse_polarization("HH"), ValidationError);
    CHECK_THROWS_AS(parse_polarization(""), ValidationError);

    CHECK(parse_scenario("LOS") == Scenario::LOS);
    CHECK(parse_scenario("nlos") == Scenario::NLOS);
    CHECK_THROWS_AS(parse_scenario("outdoor"), ValidationError);

    CHECK(to_string(Polarization::VOmni) == "VOMNI");
    CHECK(display_name(Polarization::VOmni) == "V-Omni");
    CHECK(to_string(Scenario::NLOS) == "NLOS");
}

TEST_CASE("dataset validation") {
    SUBCASE("accepts a well-formed survey and sorts it") {
        const SurveyDataset ds({sample(40.0, 110.0), sample(2.0, 70.0), sample(10.0, 90.0)});
        CHECK(ds.size() == 3);
        CHECK(ds.samples()[0].distance_m == 2.0);
        CHECK(ds.samples()[2].distance_m == 40.0);
        CHECK(ds.dl_m() == 40.0);
        CHECK(ds.d0_m() == 1.0);
        CHECK(ds.frequency_hz() == 28e9);
    }
    SUBCASE("sorting is stable and leaves values untouched") {
        const SurveyDataset ds({sample(5.0, 81.0), sample(5.0, 82.0), sample(5.0, 83.0),
                                sample(2.0, 70.0)});
        CHECK(ds.samples()[0].path_loss_db == 70.0);
        CHECK(ds.samples()[1].path_loss_db == 81.0);
        CHECK(ds.samples()[2].path_loss_db == 82.0);
        CHECK(ds.samples()[3].path_loss_db == 83.0);
    }
    SUBCASE("empty surveys are rejected") {
        CHECK_THROWS_AS(SurveyDataset({}), ValidationError);
    }
    SUBCASE("distances below d0 are rejected, naming the sample") {
        try {
            SurveyDataset({sample(2.0, 70.0), sample(0.5, 60.0)});
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(message_contains(e, "sample 2"));
            CHECK(message_contains(e, "0.5"));
        }
    }
    SUBCASE("non-positive path loss is rejected") {
        CHECK_THROWS_AS(SurveyDataset({sample(2.0, 0.0)}), ValidationError);
        CHECK_THROWS_AS(SurveyDataset({sample(2.0, -4.0)}), ValidationError);
    }
    SUBCASE("mixed attributes are rejected") {
        try {
            SurveyDataset({sample(2.0, 70.0, 28e9, Polarization::VV, Scenario::LOS),
                           sample(3.0, 72.0, 28e9, Polarization::VV, Scenario::NLOS)});
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(message_contains(e, "mixed scenario"));
        }
        CHECK_THROWS_AS(SurveyDataset({sample(2.0, 70.0, 28e9, Polarization::VV),
                                       sample(3.0, 72.0, 28e9, Polarization::VH)}),
                        ValidationError);
        CHECK_THROWS_AS(SurveyDataset({sample(2.0, 70.0, 28e9), sample(3.0, 72.0, 60e9)}),
                        ValidationError);
    }
    SUBCASE("rx_power_lin must be a linear gain in (0, 1]") {
        PathLossSample bad = sample(2.0, 70.0);
        bad.rx_power_lin = 1.5;
        CHECK_THROWS_AS(SurveyDataset({bad}), ValidationError);
        bad.rx_power_lin = 0.0;
        CHECK_THROWS_AS(SurveyDataset({bad}), ValidationError);
        bad.rx_power_lin = 1.0;
        CHECK_NOTHROW(SurveyDataset({bad}));
    }
    SUBCASE("d0 override applies to every sample") {
        CHECK_THROWS_AS(SurveyDataset({sample(2.0, 70.0)}, 2.5), ValidationError);
        const SurveyDataset ds({sample(2.0, 70.0)}, 2.0);
        CHECK(ds.d0_m() == 2.0);
    }
    SUBCASE("dl override replaces the max-distance default") {
        const SurveyDataset ds({sample(2.0, 70.0), sample(10.0, 90.0)}, 1.0, 45.7);
        CHECK(ds.dl_m() == 45.7);
        CHECK_THROWS_AS(SurveyDataset({sample(2.0, 70.0)}, 1.0, -1.0), ValidationError);
    }
}

TEST_CASE("CSV ingestion") {
    SUBCASE("three well-formed rows") {
        const SurveyDataset ds = parse_csv(
            "distance_m,path_loss_db,frequency_ghz,polarization,scenario\n"
            "2,70.5,28,VV,LOS\n"
            "10,90.25,28,VV,LOS\n"
            "40,110,28,VV,LOS\n");
        CHECK(ds.size() == 3);
        CHECK(ds.dl_m() == 40.0);
        CHECK(ds.frequency_hz() == 28e9);
        CHECK(ds.polarization() == Polarization::VV);
        CHECK_FALSE(ds.has_rx_power());
    }
    SUBCASE("rows below the reference distance are rejected with their line") {
        try {
            parse_csv(
                "distance_m,path_loss_db,frequency_ghz,polarization,scenario\n"
                "2,70.5,28,VV,LOS\n"
                "0.5,60,28,VV,LOS\n");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(message_contains(e, "line 3"));
            CHECK(message_contains(e, "0.5"));
        }
    }
    SUBCASE("mixed scenarios are rejected") {
        try {
            parse_csv(
                "distance_m,path_loss_db,frequency_ghz,polarization,scenario\n"
                "2,70.5,28,VV,LOS\n"
                "10,90,28,VV,NLOS\n");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(message_contains(e, "mixed scenario"));
        }
    }
    SUBCASE("header is required and checked") {
        CHECK_THROWS_AS(parse_csv("2,70.5,28,VV,LOS\n"), ValidationError);
        CHECK_THROWS_AS(parse_csv(""), ValidationError);
        CHECK_THROWS_AS(parse_csv("distance_m,path_loss_db\n"), ValidationError);
    }
    SUBCASE("field count must match the header") {
        try {
            parse_csv(
                "distance_m,path_loss_db,frequency_ghz,polarization,scenario\n"
                "2,70.5,28,VV\n");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(message_contains(e, "line 2"));
        }
    }
    SUBCASE("malformed numbers carry their line") {
        try {
            parse_csv(
                "distance_m,path_loss_db,frequency_ghz,polarization,scenario\n"
                "2,abc,28,VV,LOS\n");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(message_contains(e, "line 2"));
            CHECK(message_contains(e, "path_loss_db"));
        }
    }
    SUBCASE("labels are case-insensitive, frequency converts GHz to Hz") {
        const SurveyDataset ds = parse_csv(
            "distance_m,path_loss_db,frequency_ghz,polarization,scenario\n"
            "2,70.5,60,vomni,nlos\n"
            "4,81,60,VOMNI,NLOS\n");
        CHECK(ds.frequency_hz() == 60e9);
        CHECK(ds.polarization() == Polarization::VOmni);
        CHECK(ds.scenario() == Scenario::NLOS);
    }
    SUBCASE("optional rx_power_lin column, empty cells allowed") {
        const SurveyDataset ds = parse_csv(
            "distance_m,path_loss_db,frequency_ghz,polarization,scenario,rx_power_lin\n"
            "2,70.5,28,VV,LOS,1e-7\n"
            "10,90,28,VV,LOS,\n");
        CHECK(ds.samples()[0].rx_power_lin == 1e-7);
        CHECK_FALSE(ds.samples()[1].rx_power_lin.has_value());
        CHECK_FALSE(ds.has_rx_power());
    }
}

TEST_CASE("CSV round trip preserves every field") {
    PathLossSample a = sample(1.9, 66.451203, 28e9, Polarization::VH, Scenario::NLOS);
    a.rx_power_lin = 2.2625049e-7;
    PathLossSample b = sample(45.7, 123.875, 28e9, Polarization::VH, Scenario::NLOS);
    b.rx_power_lin = 4.09732690123e-13;
    const SurveyDataset ds({a, b});

    const SurveyDataset back = parse_csv(to_csv(ds));
    REQUIRE(back.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(back.samples()[i].distance_m == ds.samples()[i].distance_m);
        CHECK(back.samples()[i].path_loss_db == ds.samples()[i].path_loss_db);
        CHECK(back.samples()[i].frequency_hz == ds.samples()[i].frequency_hz);
        CHECK(back.samples()[i].polarization == ds.samples()[i].polarization);
        CHECK(back.samples()[i].scenario == ds.samples()[i].scenario);
        CHECK(back.samples()[i].rx_power_lin == ds.samples()[i].rx_power_lin);
    }
}

TEST_CASE("missing files are I/O errors") {
    CHECK_THROWS_AS(load_csv("/nonexistent/survey.csv"), IoError);
}
