"""Core settings, logging, metrics and errors for the time-dependent AB laboratory"""
