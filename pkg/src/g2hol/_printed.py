"""Connection tables and holonomy claims as printed for the seven examples.

Each table entry is a sympy-readable linear combination of ``b^j_i`` (the
endomorphism ``b_i (x) b^j``, matrix entry in row ``i`` and column ``j``).
``e^j_i`` occurs in the source as a misprint for ``b^j_i`` and is read as such.
Where the printed text is ambiguous, ``alternatives`` lists the readings that
are tried after the literal one.
"""

EXAMPLES = {
    "type1_dim5": {
        "printed_convention": "C3",
        "dim": 5,
        "catalog": "T1.1-a0",
        "generators": ["R25", "R35", "R45", "R56", "R57"],
        "Lambda": [
            "0",
            "1/2*(b^5_2-b^6_1)",
            "b^3_2-b^6_7+1/2*(b^5_3-b^7_1)",
            "-b^4_1-b^5_4+1/sqrt(2)*(b^6_3-b^7_2)",
            "-2*(b^1_1-b^5_5)-3/2*(b^2_2-b^6_6)-1/2*(b^3_3-b^7_7)-b^3_2+b^6_7-b^5_2+b^6_1",
            "-1/2*(b^2_1-b^5_6)+1/sqrt(2)*(b^4_3+b^7_4)-b^5_2+b^6_1",
            "-1/2*(b^3_1-b^5_7)-1/sqrt(2)*(b^4_2+b^6_4)",
        ],
    },
    "type1_dim6": {
        "printed_convention": "C3",
        "dim": 6,
        "catalog": "T1.4a",
        "generators": ["R25", "R35", "R36", "R56", "R67", "D6R36"],
        "Lambda": [
            "0",
            "-1/sqrt(2)*(b^5_2-b^6_1)",
            "1/sqrt(2)*(b^3_1-b^5_7)+b^4_2+b^6_4",
            "b^3_2-b^6_7",
            "1/sqrt(2)*(b^2_2-b^6_6-b^3_3+b^7_7)+sqrt(2)*(b^3_2-b^6_7)",
            "1/sqrt(2)*(b^2_1-b^5_6)-b^4_3-b^7_4-sqrt(2)*(b^5_2-b^6_1+b^5_3-b^7_1)",
            "-sqrt(2)*(b^5_2-b^6_1)+1/sqrt(2)*(b^5_3-b^7_1)",
        ],
    },
    "type1_dim7": {
        "printed_convention": "C3",
        "dim": 7,
        "catalog": "T1.2a[lambda=1/2]",
        "generators": ["R25", "R35", "R36", "R45", "R56", "R57", "D5R56"],
        "Lambda": [
            "0",
            "-sqrt(2)/4*(b^5_2-b^6_1)",
            "-sqrt(2)/8*(b^3_1-b^5_7)-1/2*(b^3_2-b^6_7)-1/4*(b^4_2+b^6_4)-3/sqrt(2)*(b^5_2-b^6_1)",
            "-1/4*(b^3_2-b^6_7)",
            "sqrt(2)/4*(-b^2_2+b^6_6+b^3_3-b^7_7)-3/sqrt(2)*(b^3_2-b^6_7)+b^5_2-b^6_1",
            # the source has an unmatched closing parenthesis after b^7_1
            "-b^1_1+b^5_5-3/2*(b^2_2-b^6_6)+1/2*(b^3_3-b^7_7)-sqrt(2)/4*(b^2_1-b^5_6)"
            "+(1/2+3/sqrt(2))*(b^3_1-b^5_7)+(sqrt(2)/4+1/2)*(b^3_2-b^6_7)+(1+sqrt(2))*(b^4_1+b^5_4)"
            "+(3+1/sqrt(2))*(b^4_2+b^6_4)+1/2*(b^4_3+b^7_4)+(1/sqrt(2)-1)*(b^5_2-b^6_1)-b^5_3+b^7_1"
            "-(1/sqrt(2)+1)*(b^6_3-b^7_2)",
            "-1/sqrt(2)*(b^5_3-b^7_1)",
        ],
        "alternatives": {
            5: [
                "-b^1_1+b^5_5-3/2*(b^2_2-b^6_6)+1/2*(b^3_3-b^7_7)-sqrt(2)/4*(b^2_1-b^5_6)"
                "+(1/2+3/sqrt(2))*(b^3_1-b^5_7)+(sqrt(2)/4+1/2)*(b^3_2-b^6_7)+(1+sqrt(2))*(b^4_1+b^5_4)"
                "+(3+1/sqrt(2))*(b^4_2+b^6_4)+1/2*(b^4_3+b^7_4)+(1/sqrt(2)-1)*(b^5_2-b^6_1-b^5_3+b^7_1)"
                "-(1/sqrt(2)+1)*(b^6_3-b^7_2)",
            ],
        },
    },
    "type2_dim3": {
        "printed_convention": "C2",
        "dim": 3,
        "catalog": "T2.5-a0-n13",
        "generators": ["R37", "R46", "R67"],
        "Lambda": [
            "0",
            "0",
            "-b^3_2+b^7_5+(1-1/sqrt(2))*(b^6_2-b^7_1)",
            "1/sqrt(2)*(b^3_1-b^6_5)+(b^4_2+e^7_4)",
            "1/sqrt(2)*(b^7_1-b^6_2)",
            "(1-1/sqrt(2))*(b^3_2-b^7_5)-1/sqrt(2)*(b^5_2-b^7_3)+b^6_2-b^7_1-b^4_1-b^6_4",
            "b^3_2-b^7_5-1/sqrt(2)*(b^3_1-b^6_5)-b^2_2+b^7_7-b^1_1+b^6_6-b^4_2-b^7_4"
            "-(1-1/sqrt(2))*(b^5_1-b^6_3)-b^6_2+b^7_1",
        ],
    },
    "type2_dim5": {
        "printed_convention": "C2",
        "dim": 5,
        "catalog": "T2.5-a0-n",
        "generators": ["R37", "R46", "R56", "R67", "D7R67"],
        "Lambda": [
            "0",
            "0",
            "0",
            "sqrt(2)*(b^3_2-b^7_5+b^6_2-b^7_1)",
            "2*(b^1_1-b^6_6)+b^2_2-b^7_7+b^3_3-b^5_5-3*(b^5_1-b^6_3)+b^6_2-b^7_1",
            "4*(b^5_1-b^6_3)",
            "b^1_2-b^7_6-sqrt(2)*(b^3_4+b^4_1+b^4_5+b^6_4)-b^5_2+b^7_3-b^6_2+b^7_1",
        ],
    },
    "type2_dim8": {
        "printed_convention": "C2",
        "dim": 8,
        "catalog": "T2.1-sl2",
        "generators": ["R17", "R36", "R37", "R56", "R57", "R67", "D6R67", "D7R67"],
        "Lambda": [
            "-4/3*(b^6_2-b^7_1)",
            "0",
            "7/9*(b^3_2-b^7_5)-sqrt(2)/3*(b^4_1+b^6_4)-1/3*(b^5_2-b^7_3)-(11/3+5/6*sqrt(2))*(b^6_2-b^7_1)",
            "-sqrt(2)/3*(b^3_1-b^6_5)-2/3*(b^4_2+b^7_4)-sqrt(2)*(b^5_1-b^6_3)+sqrt(2)/3*(b^6_2-b^7_1)",
            "-1/3*(b^3_2-b^7_5)-sqrt(2)*(b^4_1+b^6_4)-b^5_2+b^7_3+(9-1/sqrt(2))*(b^6_2-b^7_1)",
            "1/3*(b^1_2-b^7_6)+b^2_1-b^6_7-b^3_1+b^6_5+(2/3-5/6*sqrt(2))*(b^3_2-b^7_5)"
            "-sqrt(2)/3*(b^3_4+b^4_5)-b^4_1-b^6_4-sqrt(2)*(b^4_2+b^7_4+b^4_3+b^5_4)+b^5_1-b^6_3"
            "-1/sqrt(2)*(b^5_2-b^7_3)-b^6_2+b^7_1",
            "1/3*(b^1_1-b^6_6)-b^2_2+b^7_7+4/3*(b^3_3-b^5_5)+(8/3+5/6*sqrt(2))*(b^3_1-b^6_5)"
            "+11/9*(b^3_2-b^7_5)-1/3*sqrt(2)*(b^4_1+b^6_4)+(8/3*sqrt(2)+5/3)*(b^4_2+b^7_4)"
            "-(10-1/sqrt(2))*(b^5_1-b^6_3)-1/3*(b^5_2-b^7_3)-b^6_2+b^1_7",
        ],
        "alternatives": {
            # the last term is printed as b^1_7; every other occurrence pairs b^6_2 with b^7_1
            6: [
                "1/3*(b^1_1-b^6_6)-b^2_2+b^7_7+4/3*(b^3_3-b^5_5)+(8/3+5/6*sqrt(2))*(b^3_1-b^6_5)"
                "+11/9*(b^3_2-b^7_5)-1/3*sqrt(2)*(b^4_1+b^6_4)+(8/3*sqrt(2)+5/3)*(b^4_2+b^7_4)"
                "-(10-1/sqrt(2))*(b^5_1-b^6_3)-1/3*(b^5_2-b^7_3)-b^6_2+b^7_1",
            ],
        },
    },
    "type3_dim3": {
        "printed_convention": "C3",
        "dim": 3,
        "catalog": "T3.2-a0[k=2]",
        "generators": ["R45", "R56", "R57"],
        "Lambda": [
            "0",
            "0",
            "0",
            "sqrt(2)*(b^5_2-b^6_1)",
            "-b^1_1+b^5_5-1/3*(b^2_2-b^6_6)-2/3*(b^3_3-b^7_7)-b^3_2+b^6_7-b^4_1-b^5_4-b^5_2+b^6_1"
            "+1/sqrt(2)*(b^6_3-b^7_2)",
            "-b^3_2+b^6_7-sqrt(2)*(b^4_1+b^5_4)-b^5_2+b^6_1-(1-1/sqrt(2))*(b^5_3-b^7_1)+b^6_3-b^7_2",
            "-(1-1/sqrt(2))*(b^5_2-b^6_1)+4/3*(b^5_3-b^7_1)",
        ],
    },
}
