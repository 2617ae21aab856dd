#!/usr/bin/env python3
"""Regenerate the bundled demonstration dataset under src/geoden/data/.

Outputs: gazetteer.json, reports_core.csv, reports_supplement.csv,
suitability.asc. Generation is fully deterministic (fixed RNG seed), so the
committed files can be reproduced byte-for-byte.

The report sampler is shaped to preserve the documented characteristics of
the dataset the tool is modelled on:
  * 3,260 core reports (1943-2013) + 289 supplement reports (2014-2020)
  * earliest report: DENV1 in Japan, 1943 (then Hawaii, 1944)
  * DENV4 appears in Africa only in 1983 and 1995
  * Asia totals: 242 reports in 1970-1979, 541 in 1980-1989
  * DENV3 burst in the Americas from 1963 (Puerto Rico) and 1977's DENV1 wave
"""
from __future__ import annotations

import csv
import math
import random
import sys
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "geoden" / "data"
SEED = 20240531

CORE_TOTAL = 3260
SUPPLEMENT_TOTAL = 289

# (code, name, aliases, continent, subcontinent, anchors[(lat, lng, spread)])
COUNTRIES = [
    # --- Africa ---
    ("DZA", "Algeria", [], "Africa", "Northern Africa", [(36.7, 3.1, 1.2)]),
    ("EGY", "Egypt", [], "Africa", "Northern Africa", [(30.0, 31.2, 1.2)]),
    ("LBY", "Libya", [], "Africa", "Northern Africa", [(32.9, 13.2, 1.2)]),
    ("MAR", "Morocco", [], "Africa", "Northern Africa", [(33.6, -7.6, 1.2)]),
    ("SDN", "Sudan", [], "Africa", "Northern Africa", [(15.6, 32.5, 1.5)]),
    ("TUN", "Tunisia", [], "Africa", "Northern Africa", [(36.8, 10.2, 0.8)]),
    ("BEN", "Benin", [], "Africa", "Western Africa", [(6.4, 2.4, 0.8)]),
    ("BFA", "Burkina Faso", [], "Africa", "Western Africa", [(12.4, -1.5, 1.2)]),
    ("CPV", "Cabo Verde", ["Cape Verde"], "Africa", "Western Africa", [(14.9, -23.5, 0.3)]),
    ("CIV", "Côte d'Ivoire", ["Ivory Coast", "Cote d'Ivoire"], "Africa", "Western Africa", [(5.3, -4.0, 1.0)]),
    ("GMB", "Gambia", ["The Gambia"], "Africa", "Western Africa", [(13.45, -16.6, 0.4)]),
    ("GHA", "Ghana", [], "Africa", "Western Africa", [(5.6, -0.2, 1.0)]),
    ("GIN", "Guinea", [], "Africa", "Western Africa", [(9.6, -13.6, 1.0)]),
    ("GNB", "Guinea-Bissau", [], "Africa", "Western Africa", [(11.9, -15.6, 0.5)]),
    ("LBR", "Liberia", [], "Africa", "Western Africa", [(6.3, -10.8, 0.8)]),
    ("MLI", "Mali", [], "Africa", "Western Africa", [(12.6, -8.0, 1.5)]),
    ("MRT", "Mauritania", [], "Africa", "Western Africa", [(18.1, -15.95, 1.2)]),
    ("NER", "Niger", [], "Africa", "Western Africa", [(13.5, 2.1, 1.5)]),
    ("NGA", "Nigeria", [], "Africa", "Western Africa", [(6.5, 3.4, 1.0), (9.1, 7.4, 1.2)]),
    ("SEN", "Senegal", [], "Africa", "Western Africa", [(14.7, -17.4, 1.0)]),
    ("SLE", "Sierra Leone", [], "Africa", "Western Africa", [(8.5, -13.2, 0.8)]),
    ("TGO", "Togo", [], "Africa", "Western Africa", [(6.1, 1.2, 0.6)]),
    ("AGO", "Angola", [], "Africa", "Middle Africa", [(-8.8, 13.2, 1.5)]),
    ("CMR", "Cameroon", [], "Africa", "Middle Africa", [(4.05, 9.7, 1.2)]),
    ("CAF", "Central African Republic", [], "Africa", "Middle Africa", [(4.4, 18.6, 1.2)]),
    ("TCD", "Chad", [], "Africa", "Middle Africa", [(12.1, 15.0, 1.5)]),
    ("COD", "Democratic Republic of the Congo", ["DR Congo", "Congo, Democratic Republic of the", "Zaire"], "Africa", "Middle Africa", [(-4.3, 15.3, 1.5)]),
    ("COG", "Republic of the Congo", ["Congo", "Congo-Brazzaville"], "Africa", "Middle Africa", [(-4.27, 15.27, 1.0)]),
    ("GNQ", "Equatorial Guinea", [], "Africa", "Middle Africa", [(3.75, 8.78, 0.4)]),
    ("GAB", "Gabon", [], "Africa", "Middle Africa", [(0.4, 9.45, 1.0)]),
    ("STP", "Sao Tome and Principe", ["São Tomé and Príncipe"], "Africa", "Middle Africa", [(0.34, 6.73, 0.2)]),
    ("BDI", "Burundi", [], "Africa", "Eastern Africa", [(-3.4, 29.36, 0.5)]),
    ("COM", "Comoros", [], "Africa", "Eastern Africa", [(-11.7, 43.25, 0.3)]),
    ("DJI", "Djibouti", [], "Africa", "Eastern Africa", [(11.6, 43.15, 0.4)]),
    ("ERI", "Eritrea", [], "Africa", "Eastern Africa", [(15.3, 38.9, 0.8)]),
    ("ETH", "Ethiopia", [], "Africa", "Eastern Africa", [(9.0, 38.7, 1.5)]),
    ("KEN", "Kenya", [], "Africa", "Eastern Africa", [(-1.3, 36.8, 1.0), (-4.05, 39.67, 0.8)]),
    ("MDG", "Madagascar", [], "Africa", "Eastern Africa", [(-18.9, 47.5, 1.5)]),
    ("MWI", "Malawi", [], "Africa", "Eastern Africa", [(-13.96, 33.8, 1.0)]),
    ("MUS", "Mauritius", [], "Africa", "Eastern Africa", [(-20.2, 57.5, 0.3)]),
    ("MOZ", "Mozambique", [], "Africa", "Eastern Africa", [(-25.9, 32.6, 1.5)]),
    ("REU", "Réunion", ["Reunion"], "Africa", "Eastern Africa", [(-21.1, 55.5, 0.3)]),
    ("RWA", "Rwanda", [], "Africa", "Eastern Africa", [(-1.95, 30.06, 0.5)]),
    ("SYC", "Seychelles", [], "Africa", "Eastern Africa", [(-4.6, 55.45, 0.3)]),
    ("SOM", "Somalia", [], "Africa", "Eastern Africa", [(2.05, 45.3, 1.2)]),
    ("TZA", "Tanzania", ["United Republic of Tanzania", "Tanzania, United Republic of"], "Africa", "Eastern Africa", [(-6.8, 39.3, 1.2)]),
    ("UGA", "Uganda", [], "Africa", "Eastern Africa", [(0.3, 32.6, 1.0)]),
    ("ZMB", "Zambia", [], "Africa", "Eastern Africa", [(-15.4, 28.3, 1.2)]),
    ("ZWE", "Zimbabwe", [], "Africa", "Eastern Africa", [(-17.8, 31.05, 1.2)]),
    ("BWA", "Botswana", [], "Africa", "Southern Africa", [(-24.6, 25.9, 1.2)]),
    ("SWZ", "Eswatini", ["Swaziland"], "Africa", "Southern Africa", [(-26.3, 31.1, 0.4)]),
    ("LSO", "Lesotho", [], "Africa", "Southern Africa", [(-29.3, 27.5, 0.5)]),
    ("NAM", "Namibia", [], "Africa", "Southern Africa", [(-22.6, 17.1, 1.5)]),
    ("ZAF", "South Africa", [], "Africa", "Southern Africa", [(-26.2, 28.0, 1.5)]),
    # --- Antarctica ---
    ("ATA", "Antarctica", [], "Antarctica", "Antarctica", [(-77.8, 166.7, 1.0)]),
    # --- Asia ---
    ("CHN", "China", ["People's Republic of China"], "Asia", "Eastern Asia", [(23.1, 113.3, 1.5), (24.9, 102.8, 1.2)]),
    ("HKG", "Hong Kong", ["Hong Kong SAR"], "Asia", "Eastern Asia", [(22.3, 114.2, 0.2)]),
    ("JPN", "Japan", [], "Asia", "Eastern Asia", [(35.7, 139.7, 1.2), (33.6, 130.4, 0.8)]),
    ("MAC", "Macao", ["Macau"], "Asia", "Eastern Asia", [(22.2, 113.5, 0.1)]),
    ("MNG", "Mongolia", [], "Asia", "Eastern Asia", [(47.9, 106.9, 1.5)]),
    ("PRK", "North Korea", ["Korea, Democratic People's Republic of"], "Asia", "Eastern Asia", [(39.0, 125.7, 1.0)]),
    ("KOR", "South Korea", ["Korea, Republic of", "Republic of Korea"], "Asia", "Eastern Asia", [(37.5, 127.0, 1.0)]),
    ("TWN", "Taiwan", ["Taiwan, Province of China"], "Asia", "Eastern Asia", [(23.5, 120.8, 0.8)]),
    ("BRN", "Brunei", ["Brunei Darussalam"], "Asia", "South-eastern Asia", [(4.9, 114.9, 0.4)]),
    ("KHM", "Cambodia", [], "Asia", "South-eastern Asia", [(11.6, 104.9, 1.0)]),
    ("IDN", "Indonesia", [], "Asia", "South-eastern Asia", [(-6.2, 106.8, 1.2), (-7.25, 112.75, 1.2), (3.6, 98.7, 1.0)]),
    ("LAO", "Laos", ["Lao People's Democratic Republic", "Lao PDR"], "Asia", "South-eastern Asia", [(17.97, 102.6, 1.2)]),
    ("MYS", "Malaysia", [], "Asia", "South-eastern Asia", [(3.1, 101.7, 1.0), (5.4, 100.3, 0.8)]),
    ("MMR", "Myanmar", ["Burma"], "Asia", "South-eastern Asia", [(16.8, 96.2, 1.0), (21.9, 96.1, 1.0)]),
    ("PHL", "Philippines", [], "Asia", "South-eastern Asia", [(14.6, 121.0, 1.0), (10.3, 123.9, 1.0)]),
    ("SGP", "Singapore", [], "Asia", "South-eastern Asia", [(1.35, 103.82, 0.15)]),
    ("THA", "Thailand", [], "Asia", "South-eastern Asia", [(13.75, 100.5, 1.2), (18.8, 99.0, 1.0)]),
    ("TLS", "Timor-Leste", ["East Timor"], "Asia", "South-eastern Asia", [(-8.6, 125.6, 0.5)]),
    ("VNM", "Vietnam", ["Viet Nam"], "Asia", "South-eastern Asia", [(10.8, 106.7, 1.0), (21.0, 105.8, 1.0)]),
    ("AFG", "Afghanistan", [], "Asia", "Southern Asia", [(34.5, 69.2, 1.2)]),
    ("BGD", "Bangladesh", [], "Asia", "Southern Asia", [(23.8, 90.4, 1.0)]),
    ("BTN", "Bhutan", [], "Asia", "Southern Asia", [(27.5, 89.6, 0.5)]),
    ("IND", "India", [], "Asia", "Southern Asia", [(19.1, 72.9, 1.5), (28.6, 77.2, 1.5), (13.1, 80.3, 1.2), (22.6, 88.4, 1.2)]),
    ("IRN", "Iran", ["Iran (Islamic Republic of)", "Islamic Republic of Iran"], "Asia", "Southern Asia", [(27.2, 56.3, 1.5)]),
    ("MDV", "Maldives", [], "Asia", "Southern Asia", [(4.2, 73.5, 0.3)]),
    ("NPL", "Nepal", [], "Asia", "Southern Asia", [(27.7, 85.3, 0.8)]),
    ("PAK", "Pakistan", [], "Asia", "Southern Asia", [(24.9, 67.0, 1.0), (31.5, 74.3, 1.0)]),
    ("LKA", "Sri Lanka", [], "Asia", "Southern Asia", [(6.9, 79.9, 0.8)]),
    ("KAZ", "Kazakhstan", [], "Asia", "Central Asia", [(43.2, 76.9, 1.5)]),
    ("KGZ", "Kyrgyzstan", [], "Asia", "Central Asia", [(42.9, 74.6, 1.0)]),
    ("TJK", "Tajikistan", [], "Asia", "Central Asia", [(38.6, 68.8, 1.0)]),
    ("TKM", "Turkmenistan", [], "Asia", "Central Asia", [(37.9, 58.4, 1.2)]),
    ("UZB", "Uzbekistan", [], "Asia", "Central Asia", [(41.3, 69.2, 1.2)]),
    ("ARM", "Armenia", [], "Asia", "Western Asia", [(40.2, 44.5, 0.6)]),
    ("AZE", "Azerbaijan", [], "Asia", "Western Asia", [(40.4, 49.9, 0.8)]),
    ("GEO", "Georgia", [], "Asia", "Western Asia", [(41.7, 44.8, 0.8)]),
    ("IRQ", "Iraq", [], "Asia", "Western Asia", [(33.3, 44.4, 1.2)]),
    ("ISR", "Israel", [], "Asia", "Western Asia", [(32.1, 34.8, 0.6)]),
    ("JOR", "Jordan", [], "Asia", "Western Asia", [(31.9, 35.9, 0.6)]),
    ("KWT", "Kuwait", [], "Asia", "Western Asia", [(29.4, 48.0, 0.3)]),
    ("LBN", "Lebanon", [], "Asia", "Western Asia", [(33.9, 35.5, 0.4)]),
    ("OMN", "Oman", [], "Asia", "Western Asia", [(23.6, 58.5, 1.0)]),
    ("QAT", "Qatar", [], "Asia", "Western Asia", [(25.3, 51.5, 0.3)]),
    ("SAU", "Saudi Arabia", [], "Asia", "Western Asia", [(21.5, 39.2, 1.0), (24.7, 46.7, 1.0)]),
    ("SYR", "Syria", ["Syrian Arab Republic"], "Asia", "Western Asia", [(33.5, 36.3, 1.0)]),
    ("TUR", "Turkey", ["Türkiye", "Turkiye"], "Asia", "Western Asia", [(36.9, 30.7, 1.2)]),
    ("ARE", "United Arab Emirates", ["UAE"], "Asia", "Western Asia", [(25.2, 55.3, 0.6)]),
    ("YEM", "Yemen", [], "Asia", "Western Asia", [(15.4, 44.2, 1.2)]),
    # --- Europe ---
    ("DNK", "Denmark", [], "Europe", "Northern Europe", [(55.7, 12.6, 0.5)]),
    ("EST", "Estonia", [], "Europe", "Northern Europe", [(59.4, 24.7, 0.5)]),
    ("FIN", "Finland", [], "Europe", "Northern Europe", [(60.2, 24.9, 0.8)]),
    ("ISL", "Iceland", [], "Europe", "Northern Europe", [(64.1, -21.9, 0.5)]),
    ("IRL", "Ireland", [], "Europe", "Northern Europe", [(53.35, -6.26, 0.5)]),
    ("LVA", "Latvia", [], "Europe", "Northern Europe", [(56.95, 24.1, 0.5)]),
    ("LTU", "Lithuania", [], "Europe", "Northern Europe", [(54.7, 25.3, 0.5)]),
    ("NOR", "Norway", [], "Europe", "Northern Europe", [(59.9, 10.75, 0.8)]),
    ("SWE", "Sweden", [], "Europe", "Northern Europe", [(59.3, 18.1, 0.8)]),
    ("GBR", "United Kingdom", ["UK", "Great Britain"], "Europe", "Northern Europe", [(51.5, -0.1, 0.8)]),
    ("AUT", "Austria", [], "Europe", "Western Europe", [(48.2, 16.4, 0.5)]),
    ("BEL", "Belgium", [], "Europe", "Western Europe", [(50.85, 4.35, 0.4)]),
    ("FRA", "France", [], "Europe", "Western Europe", [(48.85, 2.35, 1.0), (43.7, 7.25, 0.5)]),
    ("DEU", "Germany", [], "Europe", "Western Europe", [(52.5, 13.4, 1.0)]),
    ("LUX", "Luxembourg", [], "Europe", "Western Europe", [(49.6, 6.1, 0.2)]),
    ("NLD", "Netherlands", ["The Netherlands", "Holland"], "Europe", "Western Europe", [(52.4, 4.9, 0.5)]),
    ("CHE", "Switzerland", [], "Europe", "Western Europe", [(47.4, 8.5, 0.5)]),
    ("ALB", "Albania", [], "Europe", "Southern Europe", [(41.3, 19.8, 0.5)]),
    ("BIH", "Bosnia and Herzegovina", [], "Europe", "Southern Europe", [(43.85, 18.4, 0.5)]),
    ("HRV", "Croatia", [], "Europe", "Southern Europe", [(45.8, 16.0, 0.6)]),
    ("GRC", "Greece", [], "Europe", "Southern Europe", [(37.98, 23.7, 0.8)]),
    ("ITA", "Italy", [], "Europe", "Southern Europe", [(41.9, 12.5, 1.0)]),
    ("MLT", "Malta", [], "Europe", "Southern Europe", [(35.9, 14.5, 0.1)]),
    ("MNE", "Montenegro", [], "Europe", "Southern Europe", [(42.4, 19.3, 0.3)]),
    ("MKD", "North Macedonia", ["Macedonia"], "Europe", "Southern Europe", [(42.0, 21.4, 0.4)]),
    ("PRT", "Portugal", [], "Europe", "Southern Europe", [(38.7, -9.14, 0.5), (32.65, -16.9, 0.2)]),
    ("SRB", "Serbia", [], "Europe", "Southern Europe", [(44.8, 20.5, 0.6)]),
    ("SVN", "Slovenia", [], "Europe", "Southern Europe", [(46.05, 14.5, 0.4)]),
    ("ESP", "Spain", [], "Europe", "Southern Europe", [(40.4, -3.7, 1.0)]),
    ("BLR", "Belarus", [], "Europe", "Eastern Europe", [(53.9, 27.6, 0.8)]),
    ("BGR", "Bulgaria", [], "Europe", "Eastern Europe", [(42.7, 23.3, 0.6)]),
    ("CZE", "Czechia", ["Czech Republic"], "Europe", "Eastern Europe", [(50.1, 14.4, 0.6)]),
    ("HUN", "Hungary", [], "Europe", "Eastern Europe", [(47.5, 19.05, 0.6)]),
    ("MDA", "Moldova", ["Republic of Moldova"], "Europe", "Eastern Europe", [(47.0, 28.85, 0.4)]),
    ("POL", "Poland", [], "Europe", "Eastern Europe", [(52.2, 21.0, 1.0)]),
    ("ROU", "Romania", [], "Europe", "Eastern Europe", [(44.4, 26.1, 0.8)]),
    ("RUS", "Russia", ["Russian Federation"], "Europe", "Eastern Europe", [(55.75, 37.6, 1.5)]),
    ("SVK", "Slovakia", [], "Europe", "Eastern Europe", [(48.15, 17.1, 0.5)]),
    ("UKR", "Ukraine", [], "Europe", "Eastern Europe", [(50.45, 30.5, 1.0)]),
    # --- North America ---
    ("BMU", "Bermuda", [], "North America", "Northern America", [(32.3, -64.75, 0.1)]),
    ("CAN", "Canada", [], "North America", "Northern America", [(43.7, -79.4, 1.0)]),
    ("USA", "United States", ["United States of America", "USA", "US"], "North America", "Northern America", [(21.31, -157.86, 0.5), (27.9, -81.6, 1.5), (26.2, -98.2, 1.0)]),
    ("BLZ", "Belize", [], "North America", "Central America", [(17.5, -88.2, 0.5)]),
    ("CRI", "Costa Rica", [], "North America", "Central America", [(9.9, -84.1, 0.6)]),
    ("SLV", "El Salvador", [], "North America", "Central America", [(13.7, -89.2, 0.5)]),
    ("GTM", "Guatemala", [], "North America", "Central America", [(14.6, -90.5, 0.8)]),
    ("HND", "Honduras", [], "North America", "Central America", [(14.1, -87.2, 0.8)]),
    ("MEX", "Mexico", [], "North America", "Central America", [(19.4, -99.1, 1.5), (21.0, -89.6, 1.0), (25.7, -100.3, 1.0)]),
    ("NIC", "Nicaragua", [], "North America", "Central America", [(12.1, -86.3, 0.8)]),
    ("PAN", "Panama", [], "North America", "Central America", [(9.0, -79.5, 0.6)]),
    ("AIA", "Anguilla", [], "North America", "Caribbean", [(18.22, -63.05, 0.08)]),
    ("ATG", "Antigua and Barbuda", [], "North America", "Caribbean", [(17.1, -61.8, 0.15)]),
    ("ABW", "Aruba", [], "North America", "Caribbean", [(12.5, -70.0, 0.1)]),
    ("BHS", "Bahamas", ["The Bahamas"], "North America", "Caribbean", [(25.06, -77.35, 0.4)]),
    ("BRB", "Barbados", [], "North America", "Caribbean", [(13.1, -59.6, 0.15)]),
    ("VGB", "British Virgin Islands", [], "North America", "Caribbean", [(18.43, -64.6, 0.12)]),
    ("CYM", "Cayman Islands", [], "North America", "Caribbean", [(19.3, -81.4, 0.15)]),
    ("CUB", "Cuba", [], "North America", "Caribbean", [(23.1, -82.4, 0.8), (20.0, -75.8, 0.8)]),
    ("CUW", "Curaçao", ["Curacao"], "North America", "Caribbean", [(12.1, -68.9, 0.15)]),
    ("DMA", "Dominica", [], "North America", "Caribbean", [(15.3, -61.4, 0.15)]),
    ("DOM", "Dominican Republic", [], "North America", "Caribbean", [(18.5, -69.9, 0.6)]),
    ("GRD", "Grenada", [], "North America", "Caribbean", [(12.05, -61.75, 0.15)]),
    ("GLP", "Guadeloupe", [], "North America", "Caribbean", [(16.25, -61.55, 0.2)]),
    ("HTI", "Haiti", [], "North America", "Caribbean", [(18.5, -72.3, 0.5)]),
    ("JAM", "Jamaica", [], "North America", "Caribbean", [(18.0, -76.8, 0.4)]),
    ("MTQ", "Martinique", [], "North America", "Caribbean", [(14.6, -61.0, 0.2)]),
    ("PRI", "Puerto Rico", [], "North America", "Caribbean", [(18.4, -66.1, 0.4)]),
    ("KNA", "Saint Kitts and Nevis", [], "North America", "Caribbean", [(17.3, -62.7, 0.12)]),
    ("LCA", "Saint Lucia", [], "North America", "Caribbean", [(13.9, -61.0, 0.15)]),
    ("VCT", "Saint Vincent and the Grenadines", [], "North America", "Caribbean", [(13.2, -61.2, 0.15)]),
    ("TTO", "Trinidad and Tobago", [], "North America", "Caribbean", [(10.65, -61.5, 0.3)]),
    ("VIR", "U.S. Virgin Islands", ["United States Virgin Islands", "US Virgin Islands"], "North America", "Caribbean", [(18.34, -64.9, 0.15)]),
    # --- Oceania ---
    ("AUS", "Australia", [], "Oceania", "Australia and New Zealand", [(-16.9, 145.77, 1.0), (-19.26, 146.8, 0.8), (-12.46, 130.84, 0.8)]),
    ("NZL", "New Zealand", [], "Oceania", "Australia and New Zealand", [(-36.85, 174.76, 0.8)]),
    ("FJI", "Fiji", [], "Oceania", "Melanesia", [(-18.14, 178.44, 0.5)]),
    ("NCL", "New Caledonia", [], "Oceania", "Melanesia", [(-22.27, 166.45, 0.4)]),
    ("PNG", "Papua New Guinea", [], "Oceania", "Melanesia", [(-9.44, 147.18, 1.0)]),
    ("SLB", "Solomon Islands", [], "Oceania", "Melanesia", [(-9.43, 159.95, 0.6)]),
    ("VUT", "Vanuatu", [], "Oceania", "Melanesia", [(-17.73, 168.32, 0.5)]),
    ("GUM", "Guam", [], "Oceania", "Micronesia", [(13.47, 144.75, 0.2)]),
    ("KIR", "Kiribati", [], "Oceania", "Micronesia", [(1.45, 173.0, 0.5)]),
    ("MHL", "Marshall Islands", [], "Oceania", "Micronesia", [(7.1, 171.38, 0.3)]),
    ("FSM", "Micronesia", ["Federated States of Micronesia", "Micronesia (Federated States of)"], "Oceania", "Micronesia", [(6.9, 158.2, 0.5)]),
    ("NRU", "Nauru", [], "Oceania", "Micronesia", [(-0.53, 166.93, 0.05)]),
    ("MNP", "Northern Mariana Islands", [], "Oceania", "Micronesia", [(15.2, 145.75, 0.2)]),
    ("PLW", "Palau", [], "Oceania", "Micronesia", [(7.5, 134.6, 0.2)]),
    ("ASM", "American Samoa", [], "Oceania", "Polynesia", [(-14.28, -170.7, 0.2)]),
    ("COK", "Cook Islands", [], "Oceania", "Polynesia", [(-21.2, -159.78, 0.2)]),
    ("PYF", "French Polynesia", [], "Oceania", "Polynesia", [(-17.55, -149.56, 0.4)]),
    ("NIU", "Niue", [], "Oceania", "Polynesia", [(-19.05, -169.92, 0.1)]),
    ("WSM", "Samoa", ["Western Samoa"], "Oceania", "Polynesia", [(-13.83, -171.77, 0.3)]),
    ("TON", "Tonga", [], "Oceania", "Polynesia", [(-21.14, -175.2, 0.3)]),
    ("TUV", "Tuvalu", [], "Oceania", "Polynesia", [(-8.52, 179.2, 0.1)]),
    ("WLF", "Wallis and Futuna", [], "Oceania", "Polynesia", [(-13.28, -176.17, 0.1)]),
    # --- South America ---
    ("ARG", "Argentina", [], "South America", "South America", [(-26.8, -60.4, 1.5)]),
    ("BOL", "Bolivia", ["Bolivia (Plurinational State of)", "Plurinational State of Bolivia"], "South America", "South America", [(-17.8, -63.2, 1.0)]),
    ("BRA", "Brazil", [], "South America", "South America", [(-22.9, -43.2, 1.5), (-23.55, -46.6, 1.5), (-3.1, -60.0, 1.5), (-12.97, -38.5, 1.2), (-8.05, -34.9, 1.0)]),
    ("CHL", "Chile", [], "South America", "South America", [(-33.45, -70.67, 0.8)]),
    ("COL", "Colombia", [], "South America", "South America", [(4.7, -74.1, 1.2), (10.4, -75.5, 0.8), (3.45, -76.5, 0.8)]),
    ("ECU", "Ecuador", [], "South America", "South America", [(-2.2, -79.9, 0.8)]),
    ("GUF", "French Guiana", [], "South America", "South America", [(4.9, -52.3, 0.5)]),
    ("GUY", "Guyana", [], "South America", "South America", [(6.8, -58.2, 0.6)]),
    ("PRY", "Paraguay", [], "South America", "South America", [(-25.3, -57.6, 0.8)]),
    ("PER", "Peru", [], "South America", "South America", [(-3.75, -73.25, 0.8), (-12.05, -77.05, 0.8)]),
    ("SUR", "Suriname", [], "South America", "South America", [(5.85, -55.2, 0.6)]),
    ("URY", "Uruguay", [], "South America", "South America", [(-34.9, -56.2, 0.5)]),
    ("VEN", "Venezuela", ["Venezuela (Bolivarian Republic of)", "Bolivarian Republic of Venezuela"], "South America", "South America", [(10.5, -66.9, 1.0), (8.6, -71.15, 0.8)]),
]

CONTINENT_ORDER = ["Africa", "Antarctica", "Asia", "Europe", "North America", "Oceania", "South America"]
SUBCONTINENT_ORDER = {
    "Africa": ["Northern Africa", "Western Africa", "Middle Africa", "Eastern Africa", "Southern Africa"],
    "Antarctica": ["Antarctica"],
    "Asia": ["Eastern Asia", "South-eastern Asia", "Southern Asia", "Central Asia", "Western Asia"],
    "Europe": ["Northern Europe", "Western Europe", "Southern Europe", "Eastern Europe"],
    "North America": ["Northern America", "Central America", "Caribbean"],
    "Oceania": ["Australia and New Zealand", "Melanesia", "Micronesia", "Polynesia"],
    "South America": ["South America"],
}

BY_CODE = {c[0]: c for c in COUNTRIES}

# A handful of countries are written with rotating name spellings so the
# alias path of the ingester is exercised by the bundled files.
NAME_VARIANTS = {
    "VNM": ["Vietnam", "Viet Nam"],
    "MMR": ["Myanmar", "Burma"],
    "CIV": ["Côte d'Ivoire", "Ivory Coast"],
    "LAO": ["Laos", "Lao People's Democratic Republic"],
}

# Pinned rows: (year, code, anchor_index, serotype mask bits as set)
SEED_ROWS = [
    (1943, "JPN", 0, {1}),
    (1944, "USA", 0, {1}),  # anchor 0 = Hawaii
    (1944, "JPN", 0, {1}),
    (1963, "PRI", 0, {3}),
    (1963, "PRI", 0, {3}),
    (1981, "CUB", 0, {2}),
    (1981, "CUB", 0, {2}),
    (1981, "CUB", 1, {2}),
    (1983, "SEN", 0, {4}),
    (1983, "SEN", 0, {2, 4}),
    (1995, "SEN", 0, {4}),
    (1995, "CIV", 0, {2, 4}),
    (2012, "PRT", 1, {1}),  # anchor 1 = Madeira
    (2012, "PRT", 1, {1}),
]

# Serotype profiles: (k weights for 1..4 serotypes, marginal weight per serotype)
PROFILES = {
    "1940s": ((1.0, 0.0, 0.0, 0.0), {1: 0.85, 2: 0.15, 3: 0.0, 4: 0.0}),
    "1950s": ((0.85, 0.12, 0.03, 0.0), {1: 0.40, 2: 0.35, 3: 0.15, 4: 0.10}),
    "1960s": ((0.78, 0.16, 0.045, 0.015), {1: 0.30, 2: 0.30, 3: 0.25, 4: 0.15}),
    "1970s": ((0.72, 0.19, 0.06, 0.03), {1: 0.28, 2: 0.30, 3: 0.22, 4: 0.20}),
    "1980s": ((0.68, 0.21, 0.075, 0.035), {1: 0.27, 2: 0.30, 3: 0.21, 4: 0.22}),
    "1990s": ((0.62, 0.23, 0.10, 0.05), {1: 0.25, 2: 0.30, 3: 0.25, 4: 0.20}),
    "2000s": ((0.58, 0.25, 0.11, 0.06), {1: 0.22, 2: 0.26, 3: 0.32, 4: 0.20}),
    "2010s": ((0.56, 0.26, 0.12, 0.06), {1: 0.25, 2: 0.28, 3: 0.24, 4: 0.23}),
    # Africa never samples DENV4 (the two DENV4 events are pinned seed rows)
    # and leans on DENV2, the dominant reported serotype there.
    "africa_early": ((0.90, 0.10, 0.0, 0.0), {1: 0.30, 2: 0.60, 3: 0.10, 4: 0.0}),
    "africa_late": ((0.85, 0.15, 0.0, 0.0), {1: 0.22, 2: 0.53, 3: 0.25, 4: 0.0}),
    "americas_1977": ((0.80, 0.15, 0.05, 0.0), {1: 0.80, 2: 0.10, 3: 0.05, 4: 0.05}),
    "sa_1980s": ((0.68, 0.21, 0.075, 0.035), {1: 0.50, 2: 0.20, 3: 0.05, 4: 0.25}),
    "denv3_wave": ((0.58, 0.25, 0.11, 0.06), {1: 0.18, 2: 0.22, 3: 0.45, 4: 0.15}),
}

# Core eras: (year range, profile key, {group: (count, {code: weight}, year weights fn)})
def _flat(_y: int) -> float:
    return 1.0


def _ramp(rate: float, base_year: int):
    return lambda y: 1.0 + rate * (y - base_year)


def _bump(year: int, factor: float):
    return lambda y: factor if y == year else 1.0


ERAS = [
    ("1945-1949", (1945, 1949), "1940s", {
        "Asia": (12, {"JPN": 3, "IND": 3, "THA": 2, "PHL": 2, "IDN": 1, "MMR": 1}, _flat),
        "North America": (1, {"USA": 1}, _flat),
    }),
    ("1950s", (1950, 1959), "1950s", {
        "Asia": (48, {"THA": 10, "PHL": 9, "IND": 8, "VNM": 6, "IDN": 5, "MMR": 4, "KHM": 2, "LKA": 2, "MYS": 2, "JPN": 1, "SGP": 1}, _flat),
        "North America": (4, {"TTO": 2, "CUB": 1, "PRI": 1}, _flat),
        "South America": (2, {"VEN": 1, "COL": 1}, _flat),
        "Oceania": (1, {"PNG": 1}, _flat),
    }),
    ("1960s", (1960, 1969), "1960s", {
        "Asia": (118, {"THA": 22, "VNM": 18, "PHL": 14, "IND": 14, "IDN": 12, "MYS": 9, "MMR": 8, "SGP": 7, "KHM": 6, "LKA": 5, "BGD": 2, "LAO": 1}, _ramp(0.05, 1960)),
        "North America": (16, {"PRI": 4, "JAM": 3, "MEX": 2, "HND": 2, "TTO": 2, "CUB": 1, "DOM": 1, "GLP": 1}, _flat),
        "South America": (6, {"VEN": 3, "COL": 2, "SUR": 1}, _flat),
        "Oceania": (4, {"PNG": 2, "FJI": 1, "NCL": 1}, _flat),
        "Africa": (2, {"NGA": 1, "SEN": 1}, _flat),
    }),
    ("1970s", (1970, 1979), "1970s", {
        # Asia count is exact by construction: 242 reports in 1970-1979.
        "Asia": (242, {"THA": 20, "IDN": 16, "MMR": 13, "VNM": 10, "IND": 10, "PHL": 9, "MYS": 8, "SGP": 5, "LKA": 4, "KHM": 3, "BGD": 3, "LAO": 2, "CHN": 2, "PAK": 1, "MDV": 1, "BRN": 1}, _ramp(0.06, 1970)),
        "North America": (30, {"JAM": 5, "CUB": 4, "PRI": 4, "MEX": 3, "BRB": 2, "MTQ": 2, "GLP": 2, "HND": 2, "NIC": 2, "DOM": 2, "TTO": 2, "SLV": 1, "GTM": 1, "HTI": 1, "VIR": 1}, _bump(1977, 3.0)),
        "South America": (10, {"COL": 3, "VEN": 3, "GUY": 2, "SUR": 1, "GUF": 1}, _flat),
        "Oceania": (25, {"FJI": 8, "PYF": 5, "NCL": 4, "AUS": 3, "PNG": 2, "WSM": 1, "TON": 1, "KIR": 1}, _flat),
        "Africa": (15, {"NGA": 4, "SEN": 3, "CIV": 2, "GHA": 2, "BFA": 1, "KEN": 1, "MOZ": 1, "SOM": 1}, _flat),
    }),
    ("1980s", (1980, 1989), "1980s", {
        # Asia count is exact by construction: 541 reports in 1980-1989.
        "Asia": (541, {"THA": 22, "IDN": 18, "VNM": 14, "IND": 13, "MMR": 12, "PHL": 11, "MYS": 10, "CHN": 6, "SGP": 6, "LKA": 5, "KHM": 4, "BGD": 4, "LAO": 3, "PAK": 3, "MDV": 2, "TWN": 2, "BRN": 1, "HKG": 1}, _ramp(0.08, 1980)),
        "North America": (87, {"MEX": 10, "PRI": 8, "JAM": 5, "CUB": 4, "DOM": 4, "HND": 4, "NIC": 4, "SLV": 3, "GTM": 3, "TTO": 3, "CRI": 2, "PAN": 2, "BRB": 2, "GLP": 2, "MTQ": 2, "HTI": 2, "LCA": 1, "VCT": 1, "GRD": 1, "DMA": 1, "ATG": 1, "BHS": 1, "CYM": 1, "VIR": 1, "ABW": 1, "BLZ": 1}, _flat),
        "South America": (65, {"BRA": 20, "COL": 8, "VEN": 8, "ECU": 4, "PER": 3, "BOL": 3, "PRY": 2, "GUY": 1, "SUR": 1, "GUF": 1}, _ramp(0.08, 1980)),
        "Africa": (33, {"KEN": 5, "MOZ": 4, "SEN": 4, "NGA": 3, "CIV": 3, "BFA": 2, "SDN": 2, "DJI": 2, "SOM": 2, "ETH": 1, "TZA": 1, "UGA": 1, "CMR": 1, "GAB": 1, "AGO": 1, "MDG": 1, "COM": 1, "ZAF": 1}, _flat),
        "Oceania": (30, {"AUS": 8, "FJI": 6, "NCL": 4, "PYF": 4, "WSM": 2, "TON": 2, "KIR": 1, "SLB": 1, "VUT": 1, "GUM": 1}, _flat),
    }),
    ("1990s", (1990, 1999), "1990s", {
        "Asia": (370, {"THA": 20, "VNM": 18, "IDN": 14, "IND": 12, "PHL": 10, "MYS": 9, "MMR": 7, "LKA": 6, "SGP": 6, "KHM": 5, "BGD": 5, "CHN": 5, "LAO": 4, "TWN": 3, "PAK": 3, "MDV": 2, "BRN": 1, "HKG": 1, "NPL": 1}, _bump(1995, 2.0)),
        "North America": (150, {"MEX": 16, "PRI": 10, "NIC": 8, "HND": 8, "SLV": 6, "GTM": 6, "CRI": 6, "DOM": 5, "PAN": 4, "CUB": 4, "JAM": 4, "TTO": 3, "BRB": 3, "GLP": 2, "MTQ": 2, "HTI": 2, "BLZ": 2, "LCA": 1, "VCT": 1, "GRD": 1, "DMA": 1, "BHS": 1, "ABW": 1, "CUW": 1, "VIR": 1, "KNA": 1}, _flat),
        "South America": (190, {"BRA": 40, "COL": 14, "VEN": 14, "PER": 10, "ECU": 7, "BOL": 5, "PRY": 5, "GUY": 2, "SUR": 2, "GUF": 2, "ARG": 2}, _ramp(0.06, 1990)),
        "Africa": (28, {"SEN": 4, "CIV": 3, "NGA": 3, "KEN": 3, "TZA": 2, "MOZ": 2, "DJI": 2, "SOM": 2, "ETH": 1, "UGA": 1, "CMR": 1, "GAB": 1, "MDG": 1, "COM": 1, "REU": 1}, _flat),
        "Oceania": (40, {"AUS": 6, "FJI": 5, "NCL": 4, "PYF": 4, "PNG": 3, "SLB": 2, "VUT": 2, "WSM": 2, "TON": 2, "KIR": 1, "GUM": 1, "MHL": 1, "PLW": 1, "COK": 1, "TUV": 1}, _flat),
    }),
    ("2000s", (2000, 2009), "2000s", {
        "Asia": (440, {"IDN": 20, "THA": 18, "VNM": 16, "IND": 16, "PHL": 12, "MYS": 10, "LKA": 8, "SGP": 8, "KHM": 7, "BGD": 7, "MMR": 6, "LAO": 5, "CHN": 5, "PAK": 5, "TWN": 4, "MDV": 3, "NPL": 3, "SAU": 3, "YEM": 2, "BRN": 2, "HKG": 2, "TLS": 2, "BTN": 1}, _bump(2002, 1.6)),
        "South America": (235, {"BRA": 90, "COL": 30, "VEN": 28, "PER": 20, "ECU": 14, "BOL": 10, "PRY": 10, "ARG": 8, "GUF": 4, "GUY": 3, "SUR": 3, "CHL": 1}, _bump(2002, 1.6)),
        "North America": (145, {"MEX": 22, "PRI": 10, "HND": 9, "NIC": 8, "SLV": 8, "GTM": 8, "CRI": 8, "DOM": 6, "PAN": 6, "CUB": 5, "JAM": 4, "TTO": 4, "GLP": 3, "MTQ": 3, "USA": 3, "BRB": 2, "HTI": 2, "BLZ": 2, "LCA": 1, "VCT": 1, "GRD": 1, "DMA": 1, "ATG": 1, "KNA": 1, "BHS": 1, "CYM": 1, "VIR": 1, "VGB": 1, "ABW": 1, "CUW": 1}, _bump(2002, 1.6)),
        "Africa": (52, {"SEN": 5, "KEN": 5, "CIV": 4, "BFA": 4, "NGA": 4, "TZA": 4, "SDN": 4, "GHA": 3, "DJI": 3, "MDG": 3, "SOM": 2, "ETH": 2, "ERI": 2, "COM": 2, "MUS": 2, "SYC": 2, "MOZ": 2, "CMR": 2, "GAB": 2, "COD": 2, "UGA": 1, "COG": 1, "STP": 1, "ZAF": 1, "REU": 1}, _flat),
        "Oceania": (48, {"AUS": 10, "PYF": 6, "NCL": 6, "FJI": 6, "PNG": 4, "SLB": 3, "VUT": 3, "WSM": 3, "TON": 3, "KIR": 2, "GUM": 2, "FSM": 2, "MHL": 1, "PLW": 1, "COK": 1, "TUV": 1, "NRU": 1, "NIU": 1, "ASM": 1, "WLF": 1, "MNP": 1}, _flat),
    }),
    ("2010-2013", (2010, 2013), "2010s", {
        "Asia": (120, {"IND": 14, "IDN": 12, "THA": 10, "VNM": 10, "PHL": 9, "MYS": 8, "LKA": 7, "BGD": 6, "PAK": 6, "KHM": 4, "LAO": 4, "MMR": 4, "SGP": 4, "CHN": 4, "NPL": 3, "TWN": 3, "MDV": 2, "BTN": 1, "TLS": 1, "SAU": 3, "YEM": 2, "OMN": 1, "ARE": 1}, _flat),
        "South America": (70, {"BRA": 24, "COL": 10, "PER": 8, "VEN": 6, "ECU": 5, "BOL": 4, "PRY": 4, "ARG": 4, "GUF": 2, "GUY": 1, "SUR": 1, "CHL": 1}, _flat),
        "North America": (40, {"MEX": 8, "NIC": 3, "HND": 3, "GTM": 3, "SLV": 2, "CRI": 3, "PAN": 2, "CUB": 2, "PRI": 3, "JAM": 2, "DOM": 2, "TTO": 2, "GLP": 1, "MTQ": 1, "USA": 2, "BLZ": 1}, _flat),
        "Africa": (16, {"BFA": 2, "SEN": 2, "CIV": 1, "NGA": 1, "KEN": 2, "TZA": 2, "SDN": 1, "ETH": 1, "MOZ": 1, "MDG": 1, "SYC": 1, "DJI": 1}, _flat),
        "Oceania": (10, {"FJI": 2, "NCL": 2, "PYF": 2, "AUS": 1, "SLB": 1, "VUT": 1, "PNG": 1}, _flat),
    }),
]

SUPPLEMENT_YEAR_COUNTS = {2014: 52, 2015: 48, 2016: 45, 2017: 38, 2018: 41, 2019: 35, 2020: 30}
SUPPLEMENT_GROUP_WEIGHTS = {"Asia": 45.0, "South America": 26.0, "North America": 16.0, "Africa": 8.0, "Oceania": 5.0}
SUPPLEMENT_COUNTRY_WEIGHTS = {
    "Asia": {"IND": 18, "IDN": 12, "THA": 10, "VNM": 10, "PHL": 9, "MYS": 8, "LKA": 8, "BGD": 8, "PAK": 7, "NPL": 6, "KHM": 4, "MMR": 4, "SGP": 4, "CHN": 4, "SAU": 4, "LAO": 3, "TWN": 3, "YEM": 3, "MDV": 2, "BTN": 2, "OMN": 2, "ARE": 2, "TLS": 1, "AFG": 1},
    "South America": {"BRA": 30, "COL": 12, "PER": 10, "VEN": 6, "ECU": 6, "ARG": 6, "BOL": 5, "PRY": 5, "GUF": 2, "URY": 1, "GUY": 1, "SUR": 1, "CHL": 1},
    "North America": {"MEX": 14, "NIC": 4, "HND": 4, "GTM": 4, "CRI": 4, "SLV": 3, "PAN": 3, "CUB": 3, "PRI": 3, "DOM": 3, "JAM": 2, "TTO": 2, "USA": 2, "BRB": 1, "GLP": 1, "MTQ": 1, "BLZ": 1, "HTI": 1, "BHS": 1},
    "Africa": {"BFA": 4, "SEN": 3, "KEN": 3, "TZA": 3, "CIV": 2, "NGA": 2, "SDN": 2, "ETH": 2, "MOZ": 2, "MDG": 1, "SYC": 1, "MUS": 1, "COM": 1, "DJI": 1, "SOM": 1, "TCD": 1, "CMR": 1, "GHA": 1, "UGA": 1, "REU": 1},
    "Oceania": {"FJI": 3, "NCL": 3, "PYF": 3, "AUS": 2, "SLB": 2, "VUT": 2, "PNG": 2, "WSM": 1, "TON": 1, "KIR": 1, "MHL": 1, "FSM": 1, "PLW": 1},
}


def profile_for(era_profile: str, group: str, year: int):
    if group == "Africa":
        return PROFILES["africa_early"] if year < 1990 else PROFILES["africa_late"]
    if era_profile == "1970s" and group == "North America" and year >= 1977:
        return PROFILES["americas_1977"]
    if era_profile == "1980s" and group == "South America":
        return PROFILES["sa_1980s"]
    if era_profile == "2000s" and 2000 <= year <= 2004:
        return PROFILES["denv3_wave"]
    return PROFILES[era_profile]


def sample_serotypes(rng: random.Random, profile) -> set[int]:
    k_weights, marginals = profile
    available = [s for s, w in marginals.items() if w > 0]
    k = rng.choices((1, 2, 3, 4), weights=k_weights)[0]
    k = min(k, len(available))
    chosen: set[int] = set()
    pool = list(available)
    weights = [marginals[s] for s in pool]
    for _ in range(k):
        s = rng.choices(pool, weights=weights)[0]
        i = pool.index(s)
        pool.pop(i)
        weights.pop(i)
        chosen.add(s)
    return chosen


def sample_point(rng: random.Random, code: str, anchor_index: int | None = None):
    anchors = BY_CODE[code][5]
    lat0, lng0, spread = anchors[anchor_index] if anchor_index is not None else rng.choice(anchors)
    lat = max(-85.0, min(85.0, lat0 + rng.uniform(-spread, spread)))
    lng = max(-179.9999, min(179.9999, lng0 + rng.uniform(-spread, spread)))
    return round(lat, 4), round(lng, 4)


def generate_rows(rng: random.Random):
    core = []
    for year, code, anchor, serotypes in SEED_ROWS:
        lat, lng = sample_point(rng, code, anchor_index=anchor)
        core.append((year, code, lat, lng, frozenset(serotypes)))

    for _era_name, (y0, y1), profile_key, groups in ERAS:
        years = list(range(y0, y1 + 1))
        for group, (count, country_weights, year_weight) in groups.items():
            codes = list(country_weights)
            cweights = [float(country_weights[c]) for c in codes]
            yweights = [year_weight(y) for y in years]
            for _ in range(count):
                year = rng.choices(years, weights=yweights)[0]
                code = rng.choices(codes, weights=cweights)[0]
                lat, lng = sample_point(rng, code)
                serotypes = sample_serotypes(rng, profile_for(profile_key, group, year))
                core.append((year, code, lat, lng, frozenset(serotypes)))

    supplement = []
    groups = list(SUPPLEMENT_GROUP_WEIGHTS)
    gweights = [SUPPLEMENT_GROUP_WEIGHTS[g] for g in groups]
    for year in sorted(SUPPLEMENT_YEAR_COUNTS):
        for _ in range(SUPPLEMENT_YEAR_COUNTS[year]):
            group = rng.choices(groups, weights=gweights)[0]
            table = SUPPLEMENT_COUNTRY_WEIGHTS[group]
            codes = list(table)
            code = rng.choices(codes, weights=[float(table[c]) for c in codes])[0]
            lat, lng = sample_point(rng, code)
            serotypes = sample_serotypes(
                rng, PROFILES["africa_late"] if group == "Africa" else PROFILES["2010s"]
            )
            supplement.append((year, code, lat, lng, frozenset(serotypes)))

    key = lambda r: (r[0], r[1], r[2], r[3], sorted(r[4]))
    return sorted(core, key=key), sorted(supplement, key=key)


def write_reports(path: Path, rows) -> None:
    variant_counters = {code: 0 for code in NAME_VARIANTS}
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["latitude", "longitude", "country", "year", "denv1", "denv2", "denv3", "denv4"])
        for year, code, lat, lng, serotypes in rows:
            if code in NAME_VARIANTS:
                variants = NAME_VARIANTS[code]
                name = variants[variant_counters[code] % len(variants)]
                variant_counters[code] += 1
            else:
                name = BY_CODE[code][1]
            flags = [1 if s in serotypes else 0 for s in (1, 2, 3, 4)]
            writer.writerow([f"{lat:.4f}", f"{lng:.4f}", name, year, *flags])


def write_gazetteer(path: Path) -> None:
    import json

    by_key = {}
    for code, name, aliases, continent, subcontinent, _anchors in COUNTRIES:
        by_key.setdefault((continent, subcontinent), []).append(
            {"code": code, "name": name, "aliases": aliases}
        )
    doc = {"continents": []}
    for continent in CONTINENT_ORDER:
        subs = []
        for sub in SUBCONTINENT_ORDER[continent]:
            countries = sorted(by_key.get((continent, sub), []), key=lambda c: c["name"])
            subs.append({"name": sub, "countries": countries})
        doc["continents"].append({"name": continent, "subcontinents": subs})
    path.write_text(json.dumps(doc, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")


def write_grid(path: Path, rng: random.Random) -> None:
    """Global 1-degree suitability surface: a tropical belt with longitudinal
    texture, exact zeros toward high latitudes, and polar nodata."""
    n_rows, n_cols, cell = 180, 360, 1.0
    lines = [
        "ncols 360",
        "nrows 180",
        "xllcorner -180.0",
        "yllcorner -90.0",
        "cellsize 1.0",
        "NODATA_value -9999",
    ]
    for r in range(n_rows):
        lat = 90.0 - (r + 0.5) * cell
        row = []
        for c in range(n_cols):
            lng = -180.0 + (c + 0.5) * cell
            if abs(lat) > 66.0:
                row.append("-9999")
                continue
            if abs(lat) > 56.0:
                row.append("0.0")
                continue
            base = 100.0 * math.exp(-max(0.0, abs(lat) - 12.0) ** 2 / (2 * 14.0**2))
            texture = 0.55 + 0.45 * math.sin(math.radians(lng * 3.0) + lat * 0.05) ** 2
            value = base * texture + 8.0 * rng.random() - 4.0
            value = max(0.0, min(100.0, value))
            if value < 0.05:
                value = 0.0
            row.append(f"{value:.1f}")
        lines.append(" ".join(row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def self_check() -> None:
    sys.path.insert(0, str(OUT_DIR.parent.parent))
    from geoden import analytics, ingest, model

    snapshot, diags = ingest.load_data_dir(OUT_DIR)
    for name, diag in diags.items():
        assert not diag.rejected, (name, diag.rejected[:5])
    assert snapshot.meta.source_counts["core"] == CORE_TOTAL
    assert snapshot.meta.source_counts["supplement"] == SUPPLEMENT_TOTAL
    assert snapshot.meta.year_min == 1943 and snapshot.meta.year_max == 2020

    denv1 = [r for r in snapshot.reports if model.Serotype.DENV1 in r.serotypes]
    first_year = min(r.year for r in denv1)
    assert first_year == 1943
    assert {r.country for r in denv1 if r.year == 1943} == {"JPN"}
    assert {r.country for r in snapshot.reports if r.year == 1943} == {"JPN"}

    africa = next(r for r in snapshot.default_regions() if r.name == "Africa")
    d4_years = {
        r.year
        for r in snapshot.reports
        if r.country in africa.countries and model.Serotype.DENV4 in r.serotypes
    }
    assert d4_years == {1983, 1995}, d4_years

    asia = next(r for r in snapshot.default_regions() if r.name == "Asia")
    for current, expected in ((1979, 242), (1989, 541)):
        window = model.resolve_window(current, 10)
        ctx = model.SelectionContext(regions=(asia,), window=window, serotypes=model.ALL_SEROTYPES)
        n = len(analytics.filter_reports(snapshot, ctx))
        assert n == expected, (current, n, expected)

    grid = snapshot.grid
    assert grid is not None
    lats = [r.latitude for r in snapshot.reports]
    assert grid.origin_lat <= min(lats) and max(lats) <= grid.lat_max
    print(f"self-check ok: {snapshot.meta.report_count} reports, grid {grid.n_rows}x{grid.n_cols}")


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    core, supplement = generate_rows(rng)
    assert len(core) == CORE_TOTAL, len(core)
    assert len(supplement) == SUPPLEMENT_TOTAL, len(supplement)
    write_reports(OUT_DIR / "reports_core.csv", core)
    write_reports(OUT_DIR / "reports_supplement.csv", supplement)
    write_gazetteer(OUT_DIR / "gazetteer.json")
    write_grid(OUT_DIR / "suitability.asc", random.Random(SEED + 1))
    self_check()


if __name__ == "__main__":
    main()
