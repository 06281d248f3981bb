#!/usr/bin/env python3
# Copyright 2026 The argsumm Authors.
# SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/fixtures/corpus10.jsonl (seeded, deterministic)."""

import json
import random
import sys

TOPICS = [
    ("remote work", "commuting", "offices", "productivity"),
    ("public transit", "buses", "fares", "congestion"),
    ("school uniforms", "students", "dress codes", "discipline"),
    ("nuclear power", "reactors", "waste", "emissions"),
    ("city parks", "green space", "budgets", "maintenance"),
    ("open source", "maintainers", "funding", "security"),
    ("four day weeks", "employers", "schedules", "burnout"),
    ("electric cars", "charging", "batteries", "range"),
    ("homework", "teachers", "grades", "practice"),
    ("bike lanes", "drivers", "safety", "traffic"),
]

CLAIMS = [
    "I think {t} should be expanded in most cities.",
    "We must rethink how {t} is funded.",
    "In my opinion {t} is overrated.",
    "I believe {t} is worth the cost.",
    "{T} should not be mandatory for everyone.",
    "Honestly, {t} is the best option we have.",
]
PREMISES = [
    "Because {a} keep rising every year, families feel the pressure.",
    "Since {b} are already stretched thin, any change costs real money.",
    "Studies show that {c} improved when {a} were reduced.",
    "For example, my neighbor saw fewer problems with {b} after the change.",
    "Given that {c} matters to voters, politicians pay attention to it.",
    "Data from last year suggests {a} and {b} are closely linked.",
    "Due to rising costs, {b} now take a larger share of the budget.",
    "The evidence from other countries points to better {c}.",
]
FILLER = [
    "Thanks for sharing this.",
    "What do other people here think?",
    "Good point.",
    "Has anyone tried this in a small town?",
    "Interesting thread overall.",
]
DOMAINS = ["reddit", "nyt", "stack", "email", "generic"]
ROLES = {"reddit": "comment", "nyt": "comment", "stack": "answer", "email": "email", "generic": "forum_post"}


def sentence(rng, pool, topic):
    t, a, b, c = topic
    s = rng.choice(pool).format(t=t, T=t[0].upper() + t[1:], a=a, b=b, c=c)
    return s


def post_body(rng, topic):
    parts = [sentence(rng, CLAIMS, topic)]
    t, a, b, c = topic
    for tpl in rng.sample(PREMISES, rng.randint(3, 6)):
        parts.append(tpl.format(t=t, a=a, b=b, c=c))
    if rng.random() < 0.5:
        parts.append(rng.choice(FILLER))
    if rng.random() < 0.4:
        parts.insert(rng.randint(1, len(parts)), sentence(rng, CLAIMS, topic))
    return " ".join(parts)


def main():
    rng = random.Random(13)
    out = []
    for i, topic in enumerate(TOPICS):
        domain = DOMAINS[i % len(DOMAINS)]
        conv_id = f"fx{i:02d}"
        posts = []
        for j in range(rng.randint(5, 7)):
            post = {
                "post_id": f"{conv_id}p{j}",
                "author": f"user{rng.randint(1, 40)}",
                "role": ROLES[domain],
                "body": post_body(rng, topic),
                "parent_id": conv_id if j == 0 else f"{conv_id}p{rng.randint(0, j - 1)}",
            }
            if domain in ("reddit", "stack", "nyt"):
                post["score"] = rng.randint(0, 50)
            posts.append(post)
        t = topic[0]
        record = {
            "conv_id": conv_id,
            "domain": domain,
            "title": f"Debate: {t}",
            "tags": [t.replace(" ", "-")],
            "posts": posts,
            "reference_summary": (
                f"Commenters disagree about {t}. Some argue it should be expanded because "
                f"{topic[1]} benefit, while others point to costs for {topic[2]} and doubts about {topic[3]}."
            ),
        }
        if domain == "nyt":
            record["context"] = f"{t} | {topic[1]}, {topic[3]}"
        out.append(json.dumps(record, ensure_ascii=False, sort_keys=True))
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
