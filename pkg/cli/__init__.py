"""Command-line front end for the time-dependent AB laboratory"""
